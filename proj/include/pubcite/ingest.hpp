#pragma once

#include "pubcite/model.hpp"
#include "pubcite/taxonomy.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pubcite {

/// Inclusive publication-year filter.
struct YearWindow {
  int from_year;
  int to_year;

  YearWindow(int from, int to);  // throws Error when from > to
};

/// Header the record file must start with, verbatim.
inline constexpr std::string_view kRecordHeader =
    "record_id\tdoc_type\traw_publisher\tparent_book_id\tpub_year\tsubject_categories\tcitations";

/// Parses one data line of a record file. Fields are tab-separated;
/// categories are split on `;` and trimmed; an empty parent_book_id cell
/// means absent. Throws MalformedLine on any violation.
BibRecord parse_record_line(std::string_view line, int line_no);

/// Reads a whole record file: header check, per-line parsing, duplicate
/// record_id detection across the entire file, then the year-window
/// filter. Throws MalformedLine / DuplicateRecordId.
Corpus load_corpus(std::istream& in, const YearWindow& window);
Corpus load_corpus_text(std::string_view text, const YearWindow& window);
Corpus load_corpus_file(const std::string& path, const YearWindow& window);

/// Serializes a corpus back to the record-file format (header + one line
/// per record, in corpus order). Re-parsing yields an equal record set.
std::string write_corpus(const Corpus& corpus);

/// Non-fatal diagnostics emitted after a successful load.
struct Warning {
  enum class Kind { OrphanChapter, UnmappedCategory };
  Kind kind;
  std::string subject;       // record_id or category name
  std::string detail;
  std::int64_t count = 1;    // affected records (UnmappedCategory)

  std::string to_string() const;
  bool operator==(const Warning&) const = default;
};

/// Chapters whose parent_book_id matches no book record, and categories
/// the taxonomy does not map. Records are kept either way.
std::vector<Warning> validate_corpus(const Corpus& corpus, const Taxonomy& taxonomy);

}  // namespace pubcite
