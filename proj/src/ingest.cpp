#include "pubcite/ingest.hpp"

#include "pubcite/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace pubcite {

YearWindow::YearWindow(int from, int to) : from_year(from), to_year(to) {
  if (from > to) {
    throw Error("invalid year window: from-year " + std::to_string(from) + " > to-year " +
                std::to_string(to));
  }
}

namespace {

int parse_year(std::string_view s, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw MalformedLine(line_no, "pub_year is not an integer: \"" + std::string(s) + "\"");
  }
  return value;
}

std::int64_t parse_citations(std::string_view s, int line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw MalformedLine(line_no, "citations is not an integer: \"" + std::string(s) + "\"");
  }
  if (value < 0) throw MalformedLine(line_no, "citations must be non-negative");
  return value;
}

}  // namespace

BibRecord parse_record_line(std::string_view line, int line_no) {
  auto fields = text::split(line, '\t');
  if (fields.size() != 7) {
    throw MalformedLine(line_no, "expected 7 tab-separated columns, got " +
                                     std::to_string(fields.size()));
  }

  BibRecord record;
  record.record_id = std::string(text::trim_ascii(fields[0]));
  if (record.record_id.empty()) throw MalformedLine(line_no, "empty record_id");

  std::string_view doc_type = text::trim_ascii(fields[1]);
  if (text::iequals_ascii(doc_type, "BOOK")) {
    record.doc_type = DocType::Book;
  } else if (text::iequals_ascii(doc_type, "CHAPTER")) {
    record.doc_type = DocType::Chapter;
  } else {
    throw MalformedLine(line_no, "doc_type must be BOOK or CHAPTER, got \"" +
                                     std::string(doc_type) + "\"");
  }

  record.raw_publisher = std::string(text::trim_ascii(fields[2]));
  if (record.raw_publisher.empty()) throw MalformedLine(line_no, "empty raw_publisher");

  std::string_view parent = text::trim_ascii(fields[3]);
  if (record.doc_type == DocType::Book) {
    if (!parent.empty()) {
      throw MalformedLine(line_no, "a BOOK record must not carry a parent_book_id");
    }
  } else {
    if (parent.empty()) {
      throw MalformedLine(line_no, "a CHAPTER record must carry a parent_book_id");
    }
    record.parent_book_id = std::string(parent);
  }

  record.pub_year = parse_year(text::trim_ascii(fields[4]), line_no);

  std::set<std::string> categories;
  for (auto part : text::split(fields[5], ';')) {
    std::string_view category = text::trim_ascii(part);
    if (!category.empty()) categories.emplace(category);
  }
  if (categories.empty()) throw MalformedLine(line_no, "empty subject_categories");
  record.categories.assign(categories.begin(), categories.end());

  record.citations = parse_citations(text::trim_ascii(fields[6]), line_no);
  return record;
}

Corpus load_corpus(std::istream& in, const YearWindow& window) {
  std::string line;
  if (!std::getline(in, line)) throw MalformedLine(1, "missing header line");
  if (text::trim_ascii(line) != kRecordHeader) {
    throw MalformedLine(1, "header does not match the record-file column list");
  }

  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim_ascii(line).empty()) continue;
    BibRecord record = parse_record_line(line, line_no);
    if (!seen_ids.insert(record.record_id).second) throw DuplicateRecordId(record.record_id);
    if (record.pub_year < window.from_year || record.pub_year > window.to_year) continue;
    corpus.records.push_back(std::move(record));
  }
  return corpus;
}

Corpus load_corpus_text(std::string_view content, const YearWindow& window) {
  std::istringstream in{std::string(content)};
  return load_corpus(in, window);
}

Corpus load_corpus_file(const std::string& path, const YearWindow& window) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open record file: " + path);
  return load_corpus(in, window);
}

std::string write_corpus(const Corpus& corpus) {
  std::string out{kRecordHeader};
  out.push_back('\n');
  for (const auto& record : corpus.records) {
    out += record.record_id;
    out.push_back('\t');
    out += record.is_book() ? "BOOK" : "CHAPTER";
    out.push_back('\t');
    out += record.raw_publisher;
    out.push_back('\t');
    if (record.parent_book_id) out += *record.parent_book_id;
    out.push_back('\t');
    out += std::to_string(record.pub_year);
    out.push_back('\t');
    for (std::size_t i = 0; i < record.categories.size(); ++i) {
      if (i) out.push_back(';');
      out += record.categories[i];
    }
    out.push_back('\t');
    out += std::to_string(record.citations);
    out.push_back('\n');
  }
  return out;
}

std::string Warning::to_string() const {
  switch (kind) {
    case Kind::OrphanChapter:
      return "orphan chapter " + subject + ": " + detail;
    case Kind::UnmappedCategory:
      return "unmapped category \"" + subject + "\" (" + std::to_string(count) +
             (count == 1 ? " record)" : " records)");
  }
  return {};
}

std::vector<Warning> validate_corpus(const Corpus& corpus, const Taxonomy& taxonomy) {
  std::vector<Warning> warnings;

  std::unordered_set<std::string> book_ids;
  for (const auto& record : corpus.records) {
    if (record.is_book()) book_ids.insert(record.record_id);
  }
  for (const auto& record : corpus.records) {
    if (record.parent_book_id && !book_ids.contains(*record.parent_book_id)) {
      warnings.push_back({Warning::Kind::OrphanChapter, record.record_id,
                          "parent_book_id \"" + *record.parent_book_id + "\" matches no book record",
                          1});
    }
  }

  std::map<std::string, std::int64_t> unmapped;  // display name -> record count
  for (const auto& record : corpus.records) {
    for (const auto& category : record.categories) {
      if (!taxonomy.discipline_for(category)) unmapped[category] += 1;
    }
  }
  for (const auto& [category, count] : unmapped) {
    warnings.push_back({Warning::Kind::UnmappedCategory, category, "not in the active taxonomy", count});
  }
  return warnings;
}

}  // namespace pubcite
