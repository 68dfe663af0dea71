#include "pubcite/report.hpp"

#include "pubcite/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>

namespace pubcite {

namespace {

using ordered_json = nlohmann::ordered_json;

/// round-half-up(100 * value) as an integer; exact while value fits.
std::int64_t half_up_hundredths(const Rational& value) {
  const auto n = static_cast<__int128>(value.numerator());
  const auto d = static_cast<__int128>(value.denominator());  // > 0, normalized
  return static_cast<std::int64_t>((200 * n + d) / (2 * d));
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string md_cell(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

template <typename Row>
std::string avg_cit_text(const Row& row) {
  return row.total_items == 0 ? "n/a" : round_avg(row.avg_cit());
}

template <typename Row>
std::string non_cit_text(const Row& row) {
  return row.total_items == 0 ? "n/a" : round_pct(row.non_cit());
}

constexpr std::string_view kRankingHeader =
    "publisher,total_items,books,chapters,total_citations,avg_cit,non_cit_pct";
constexpr std::string_view kOverviewHeader =
    "discipline,total_items,books,chapters,total_citations,avg_cit,non_cit_pct";

void csv_ranking_row(std::string& out, const IndicatorRow& row) {
  out += csv_field(row.publisher.canonical_name);
  out += ',' + std::to_string(row.total_items);
  out += ',' + std::to_string(row.books);
  out += ',' + std::to_string(row.chapters);
  out += ',' + std::to_string(row.total_citations);
  out += ',' + avg_cit_text(row);
  out += ',' + non_cit_text(row);
  out += '\n';
}

std::string render_csv(const ReportSet& report) {
  std::string out;
  bool have_section = false;

  if (!report.rankings.empty() || (!report.overview && !report.summary)) {
    have_section = true;
    if (report.rankings.size() <= 1) {
      out += kRankingHeader;
      out += '\n';
      if (!report.rankings.empty()) {
        for (const auto& row : report.rankings.front().second) csv_ranking_row(out, row);
      }
    } else {
      out += "discipline,";
      out += kRankingHeader;
      out += '\n';
      for (const auto& [discipline, rows] : report.rankings) {
        for (const auto& row : rows) {
          out += csv_field(discipline);
          out += ',';
          csv_ranking_row(out, row);
        }
      }
    }
  }

  if (report.overview) {
    if (have_section) out += '\n';
    have_section = true;
    out += kOverviewHeader;
    out += '\n';
    for (const auto& row : *report.overview) {
      out += csv_field(row.discipline);
      out += ',' + std::to_string(row.total_items);
      out += ',' + std::to_string(row.books);
      out += ',' + std::to_string(row.chapters);
      out += ',' + std::to_string(row.total_citations);
      out += ',' + avg_cit_text(row);
      out += ',' + non_cit_text(row);
      out += '\n';
    }
  }

  if (report.summary) {
    if (have_section) out += '\n';
    out += "key,value\n";
    for (const auto& [key, value] : summary_lines(*report.summary, report.cpb_mode)) {
      out += csv_field(key);
      out += ',' + csv_field(value);
      out += '\n';
    }
  }
  return out;
}

ordered_json ranking_row_json(const IndicatorRow& row) {
  return ordered_json{{"publisher", row.publisher.canonical_name},
                      {"total_items", row.total_items},
                      {"books", row.books},
                      {"chapters", row.chapters},
                      {"total_citations", row.total_citations},
                      {"uncited_items", row.uncited_items},
                      {"avg_cit", avg_cit_text(row)},
                      {"non_cit_pct", non_cit_text(row)}};
}

std::string render_json(const ReportSet& report) {
  ordered_json doc = ordered_json::object();
  for (const auto& [discipline, rows] : report.rankings) {
    ordered_json table = ordered_json::array();
    for (const auto& row : rows) table.push_back(ranking_row_json(row));
    doc[discipline] = std::move(table);
  }
  if (report.overview) {
    ordered_json table = ordered_json::array();
    for (const auto& row : *report.overview) {
      table.push_back(ordered_json{{"discipline", row.discipline},
                                   {"total_items", row.total_items},
                                   {"books", row.books},
                                   {"chapters", row.chapters},
                                   {"total_citations", row.total_citations},
                                   {"uncited_items", row.uncited_items},
                                   {"avg_cit", avg_cit_text(row)},
                                   {"non_cit_pct", non_cit_text(row)}});
    }
    doc["overview"] = std::move(table);
  }
  if (report.summary) {
    ordered_json summary = ordered_json::object();
    for (const auto& [key, value] : summary_lines(*report.summary, report.cpb_mode)) {
      summary[key] = value;
    }
    doc["summary"] = std::move(summary);
  }
  return doc.dump(2) + "\n";
}

constexpr std::string_view kMdRankingHeader =
    "| Publisher | Total Items | Books | Chapters | Total Citations | AvgCit | NonCit |\n"
    "| --- | --- | --- | --- | --- | --- | --- |\n";

std::string render_markdown(const ReportSet& report) {
  std::string out;
  bool have_section = false;
  for (const auto& [discipline, rows] : report.rankings) {
    if (have_section) out += '\n';
    have_section = true;
    out += "### " + md_cell(discipline) + "\n\n";
    out += kMdRankingHeader;
    for (const auto& row : rows) {
      out += "| " + md_cell(row.publisher.canonical_name);
      out += " | " + std::to_string(row.total_items);
      out += " | " + std::to_string(row.books);
      out += " | " + std::to_string(row.chapters);
      out += " | " + std::to_string(row.total_citations);
      out += " | " + avg_cit_text(row);
      out += " | " + non_cit_text(row);
      out += " |\n";
    }
  }
  if (report.overview) {
    if (have_section) out += '\n';
    have_section = true;
    out += "### Overview\n\n";
    out +=
        "| Discipline | Total Items | Books | Chapters | Total Citations | AvgCit | NonCit |\n"
        "| --- | --- | --- | --- | --- | --- | --- |\n";
    for (const auto& row : *report.overview) {
      out += "| " + md_cell(row.discipline);
      out += " | " + std::to_string(row.total_items);
      out += " | " + std::to_string(row.books);
      out += " | " + std::to_string(row.chapters);
      out += " | " + std::to_string(row.total_citations);
      out += " | " + avg_cit_text(row);
      out += " | " + non_cit_text(row);
      out += " |\n";
    }
  }
  if (report.summary) {
    if (have_section) out += '\n';
    out += "### Summary\n\n| Key | Value |\n| --- | --- |\n";
    for (const auto& [key, value] : summary_lines(*report.summary, report.cpb_mode)) {
      out += "| " + md_cell(key) + " | " + md_cell(value) + " |\n";
    }
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view token) {
  if (token == "csv") return Format::Csv;
  if (token == "json") return Format::Json;
  if (token == "md") return Format::Markdown;
  throw UnsupportedFormat(std::string(token));
}

CpbMode parse_cpb_mode(std::string_view token) {
  if (token == "floor") return CpbMode::Floor;
  if (token == "decimals") return CpbMode::TwoDecimals;
  throw Error("invalid chapters-per-book mode: \"" + std::string(token) +
              "\" (expected floor|decimals)");
}

std::vector<IndicatorRow> rank_discipline(std::vector<IndicatorRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const IndicatorRow& a, const IndicatorRow& b) {
    if (a.total_items != b.total_items) return a.total_items > b.total_items;
    return a.publisher < b.publisher;
  });
  return rows;
}

std::string round_avg(const Rational& value) {
  const std::int64_t h = half_up_hundredths(value);
  std::string out = std::to_string(h / 100) + '.';
  const std::int64_t frac = h % 100;
  if (frac < 10) out += '0';
  out += std::to_string(frac);
  return out;
}

std::string round_pct(const Rational& value) {
  return std::to_string(half_up_hundredths(value)) + "%";
}

std::string render_chapters_per_book(const Rational& value, CpbMode mode) {
  if (mode == CpbMode::Floor) {
    return std::to_string(value.numerator() / value.denominator());
  }
  return round_avg(value);
}

std::vector<std::pair<std::string, std::string>> summary_lines(const CorpusSummary& summary,
                                                               CpbMode mode) {
  auto ratio_text = [mode](const std::optional<Rational>& value) {
    return value ? render_chapters_per_book(*value, mode) : std::string("n/a");
  };
  std::vector<std::pair<std::string, std::string>> lines;
  lines.emplace_back("total_items", std::to_string(summary.total_items));
  lines.emplace_back("total_books", std::to_string(summary.total_books));
  lines.emplace_back("total_chapters", std::to_string(summary.total_chapters));
  lines.emplace_back("chapters_per_book", ratio_text(summary.chapters_per_book()));
  lines.emplace_back("field_items", std::to_string(summary.field_items));
  lines.emplace_back("field_books", std::to_string(summary.field_books));
  lines.emplace_back("field_chapters", std::to_string(summary.field_chapters));
  lines.emplace_back("field_chapters_per_book", ratio_text(summary.field_chapters_per_book()));
  const auto share = summary.field_share();
  lines.emplace_back("field_share", share ? round_pct(*share) : "n/a");
  return lines;
}

std::string render(const ReportSet& report, Format format) {
  switch (format) {
    case Format::Csv: return render_csv(report);
    case Format::Json: return render_json(report);
    case Format::Markdown: return render_markdown(report);
  }
  throw UnsupportedFormat("unknown");
}

std::string render_summary(const CorpusSummary& summary, CpbMode mode) {
  std::string out;
  for (const auto& [key, value] : summary_lines(summary, mode)) {
    out += key;
    out += ": ";
    out += value;
    out += '\n';
  }
  return out;
}

std::string render_audit(const AuditReport& report, Format format) {
  if (format == Format::Csv) {
    std::string out = "canonical,variant,count\n";
    for (const auto& cluster : report.clusters) {
      for (const auto& [raw, count] : cluster.variants) {
        out += csv_field(cluster.publisher.canonical_name);
        out += ',' + csv_field(raw);
        out += ',' + std::to_string(count);
        out += '\n';
      }
    }
    if (!report.near_misses.empty()) {
      out += "\nnear_miss_left,near_miss_right\n";
      for (const auto& pair : report.near_misses) {
        out += csv_field(pair.left.canonical_name);
        out += ',' + csv_field(pair.right.canonical_name);
        out += '\n';
      }
    }
    return out;
  }
  if (format == Format::Json) {
    ordered_json doc = ordered_json::object();
    ordered_json clusters = ordered_json::array();
    for (const auto& cluster : report.clusters) {
      ordered_json variants = ordered_json::array();
      for (const auto& [raw, count] : cluster.variants) {
        variants.push_back(ordered_json{{"raw", raw}, {"count", count}});
      }
      clusters.push_back(ordered_json{{"canonical", cluster.publisher.canonical_name},
                                      {"variants", std::move(variants)}});
    }
    doc["clusters"] = std::move(clusters);
    ordered_json near = ordered_json::array();
    for (const auto& pair : report.near_misses) {
      near.push_back(
          ordered_json{{"left", pair.left.canonical_name}, {"right", pair.right.canonical_name}});
    }
    doc["near_misses"] = std::move(near);
    return doc.dump(2) + "\n";
  }
  std::string out = "### Variant clusters\n\n| Canonical | Variant | Count |\n| --- | --- | --- |\n";
  for (const auto& cluster : report.clusters) {
    for (const auto& [raw, count] : cluster.variants) {
      out += "| " + md_cell(cluster.publisher.canonical_name) + " | " + md_cell(raw) + " | " +
             std::to_string(count) + " |\n";
    }
  }
  if (!report.near_misses.empty()) {
    out += "\n### Near misses\n\n| Left | Right |\n| --- | --- |\n";
    for (const auto& pair : report.near_misses) {
      out += "| " + md_cell(pair.left.canonical_name) + " | " + md_cell(pair.right.canonical_name) +
             " |\n";
    }
  }
  return out;
}

std::string render_series(const std::vector<SeriesRow>& rows, Format format) {
  auto ratio_text = [](const SeriesRow& row) {
    return row.ratio ? round_avg(*row.ratio) : std::string();
  };
  if (format == Format::Csv) {
    std::string out = "discipline,publisher,books,chapters,chapters_per_book\n";
    for (const auto& row : rows) {
      out += csv_field(row.discipline);
      out += ',' + csv_field(row.publisher.canonical_name);
      out += ',' + std::to_string(row.books);
      out += ',' + std::to_string(row.chapters);
      out += ',' + ratio_text(row);
      out += '\n';
    }
    return out;
  }
  if (format == Format::Json) {
    ordered_json doc = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json item{{"discipline", row.discipline},
                        {"publisher", row.publisher.canonical_name},
                        {"books", row.books},
                        {"chapters", row.chapters}};
      if (row.ratio) {
        item["chapters_per_book"] = round_avg(*row.ratio);
      } else {
        item["chapters_per_book"] = nullptr;
      }
      doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
  }
  std::string out =
      "| Discipline | Publisher | Books | Chapters | Chapters/Book |\n"
      "| --- | --- | --- | --- | --- |\n";
  for (const auto& row : rows) {
    out += "| " + md_cell(row.discipline) + " | " + md_cell(row.publisher.canonical_name) + " | " +
           std::to_string(row.books) + " | " + std::to_string(row.chapters) + " | " +
           ratio_text(row) + " |\n";
  }
  return out;
}

std::string render_warnings(const std::vector<Warning>& warnings) {
  std::string out;
  for (const auto& warning : warnings) {
    out += "warning: " + warning.to_string() + '\n';
  }
  return out;
}

}  // namespace pubcite
