#include "fixtures.hpp"

#include "frozen.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string_view>
#include <vector>

namespace pubcite::fixtures {

namespace {

constexpr std::string_view kHeader =
    "record_id\tdoc_type\traw_publisher\tparent_book_id\tpub_year\tsubject_categories\t"
    "citations\n";

std::string format_id(const char* pattern, int publisher, int index) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), pattern, publisher, index);
  return buffer;
}

void append_line(std::string& out, const std::string& id, bool is_book,
                 std::string_view publisher, const std::string& parent, int year,
                 std::string_view categories, std::int64_t citations) {
  out += id;
  out += is_book ? "\tBOOK\t" : "\tCHAPTER\t";
  out += publisher;
  out += '\t';
  out += parent;
  out += '\t';
  out += std::to_string(year);
  out += '\t';
  out += categories;
  out += '\t';
  out += std::to_string(citations);
  out += '\n';
}

constexpr std::array<std::string_view, 4> kSpringerVariants{
    "Springer-Verlag Wien", "Springer-Verlag Tokyo", "Springer Publishing Co", "Springer"};

}  // namespace

std::string fix_ils_tsv() {
  constexpr std::string_view category = "Information Science & Library Science";
  std::string out(kHeader);
  for (std::size_t p = 0; p < frozen::kIlsRows.size(); ++p) {
    const auto& row = frozen::kIlsRows[p];
    const std::int64_t cited = row.total_items - row.uncited;
    auto citations_for = [&](std::int64_t item_index) -> std::int64_t {
      if (item_index < row.uncited) return 0;
      if (item_index == row.uncited) return row.citations - (cited - 1);
      return 1;
    };
    auto publisher_for = [&](std::int64_t item_index) -> std::string_view {
      if (row.canonical == "SPRINGER") return kSpringerVariants[item_index % 4];
      return row.fixture_raw;
    };
    std::int64_t item_index = 0;
    for (std::int64_t b = 1; b <= row.books; ++b, ++item_index) {
      append_line(out, format_id("ILS-P%02d-B%04d", static_cast<int>(p), static_cast<int>(b)),
                  true, publisher_for(item_index), "", 2006 + static_cast<int>(item_index % 6),
                  category, citations_for(item_index));
    }
    for (std::int64_t c = 1; c <= row.chapters; ++c, ++item_index) {
      const std::int64_t parent_book = (c - 1) % row.books + 1;
      append_line(out, format_id("ILS-P%02d-C%04d", static_cast<int>(p), static_cast<int>(c)),
                  false, publisher_for(item_index),
                  format_id("ILS-P%02d-B%04d", static_cast<int>(p), static_cast<int>(parent_book)),
                  2006 + static_cast<int>(item_index % 6), category, citations_for(item_index));
    }
    // Out-of-window padding: dropped by the default 2006-2011 window.
    for (int k = 1; k <= 10; ++k) {
      append_line(out, format_id("ILS-P%02d-XB%02d", static_cast<int>(p), k), true,
                  row.fixture_raw, "", 2005, category, 2);
    }
    for (int k = 1; k <= 10; ++k) {
      append_line(out, format_id("ILS-P%02d-XC%02d", static_cast<int>(p), k), false,
                  row.fixture_raw, format_id("ILS-P%02d-XB%02d", static_cast<int>(p), k), 2012,
                  category, 1);
    }
  }
  return out;
}

std::string fix_all_tsv() {
  // Raw publisher spellings; same-line variants canonicalize together.
  static const std::vector<std::vector<std::string_view>> publishers{
      {"Springer", "Springer-Verlag Wien", "Springer-Verlag Tokyo", "Springer Publishing Co"},
      {"Routledge", "ROUTLEDGE"},
      {"Palgrave"},
      {"Univ California Press", "UNIV CALIFORNIA PRESS"},
      {"Cambridge Univ Press"},
      {"Elsevier", "elsevier"},
      {"Nova Science Publishers, Inc", "Nova Science Publishers Inc"},
      {"Walter de Gruyter & Co"},
      {"M E Sharpe Inc"},
      {"Edward Elgar Publishing Ltd"},
      {"IOS Press"},
      {"Annual Reviews"},
      {"Princeton Univ Press"},
      {"E J Brill"},
  };
  // The 40 shipped categories, plus case variants and unmapped strays.
  static const std::vector<std::string_view> categories{
      "Anthropology", "Archaeology", "Cultural Studies", "Social Issues", "Area Studies",
      "Asian Studies", "Art", "Film, Radio, Television", "Communication",
      "Industrial Relations & Labor", "Business, Finance", "Business", "Economics",
      "Education & Educational Research", "Education, Scientific Disciplines",
      "Education, Special", "Psychology, Educational", "Geography", "Demography", "History",
      "History & Philosophy Of Science", "Information Science & Library Science",
      "Language & Linguistics", "Linguistics", "Law", "Literature, American", "Poetry",
      "Literature, Slavic", "Literature, Romance", "Literature, British Isles",
      "Literature, African, Australian, Canadian", "Literature",
      "Literature, German, Dutch, Scandinavian", "Management", "Ethics", "Philosophy",
      "International Relations", "Political Science", "Religion", "Sociology",
      "history", "LAW", "poetry", "Zoology", "Quantum Mechanics",
  };

  std::mt19937_64 rng(20120518);  // fixed seed: fixture bytes are frozen
  auto draw = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::string out(kHeader);
  std::vector<std::string> book_ids;
  int next_missing = 1;
  int record_no = 0;

  auto emit = [&](bool is_book, std::string_view publisher, const std::string& parent, int year,
                  const std::string& category_field, std::int64_t citations) {
    ++record_no;
    char id[24];
    std::snprintf(id, sizeof(id), "ALL-R%05d", record_no);
    if (is_book) book_ids.emplace_back(id);
    append_line(out, id, is_book, publisher, parent, year, category_field, citations);
  };

  // Seed rows: one per shipped category with an in-window year, so every
  // discipline is guaranteed to appear.
  for (std::size_t i = 0; i < 40; ++i) {
    const auto& pool = publishers[i % publishers.size()];
    const bool is_book = i % 5 == 0;  // i == 0 is a book, so chapters always have a parent
    const std::string parent = is_book ? "" : book_ids[i % book_ids.size()];
    emit(is_book, pool[i % pool.size()], parent, 2006 + static_cast<int>(i % 6),
         std::string(categories[i]), static_cast<std::int64_t>(i % 4));
  }

  for (int i = 0; i < 1160; ++i) {
    const auto& pool = publishers[draw(publishers.size())];
    const std::string_view publisher = pool[draw(pool.size())];
    const bool is_book = draw(10) == 0 || book_ids.empty();

    std::string parent;
    if (!is_book) {
      if (draw(50) == 0) {
        parent = "FIX-MISSING-" + std::to_string(next_missing++);
      } else {
        parent = book_ids[draw(book_ids.size())];
      }
    }

    const int year = 2004 + static_cast<int>(draw(10));  // 2004..2013, some out of window

    std::string category_field(categories[draw(categories.size())]);
    const std::size_t extra = draw(3);
    for (std::size_t k = 0; k < extra; ++k) {
      const std::string_view candidate = categories[draw(categories.size())];
      if (category_field.find(candidate) == std::string::npos) {
        category_field += ';';
        category_field += candidate;
      }
    }

    const std::int64_t citations =
        draw(100) < 80 ? 0 : static_cast<std::int64_t>(1 + draw(12));
    emit(is_book, publisher, parent, year, category_field, citations);
  }
  return out;
}

}  // namespace pubcite::fixtures
