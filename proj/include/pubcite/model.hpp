#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pubcite {

/// Exact rational used for every derived indicator. Counts stay integers;
/// quotients stay exact until a renderer rounds them.
using Rational = boost::rational<std::int64_t>;

/// Parses "189", "12.76" or "25/2" into an exact rational.
Rational parse_rational(std::string_view text);

enum class DocType { Book, Chapter };

/// One indexed item: a book or a book chapter.
struct BibRecord {
  std::string record_id;
  DocType doc_type = DocType::Book;
  std::string raw_publisher;
  std::optional<std::string> parent_book_id;  // present iff doc_type == Chapter
  int pub_year = 0;
  std::vector<std::string> categories;  // trimmed, deduplicated, sorted, non-empty
  std::int64_t citations = 0;

  bool is_book() const { return doc_type == DocType::Book; }
  bool operator==(const BibRecord&) const = default;
};

struct Corpus {
  std::vector<BibRecord> records;  // file order; not semantically meaningful
};

/// Set equality on records (record_id is unique within a corpus).
bool same_records(const Corpus& a, const Corpus& b);

/// Canonical publisher identity. Always the fixed point of
/// normalize_key + alias resolution; construct via canonicalize().
struct PublisherId {
  std::string canonical_name;
  auto operator<=>(const PublisherId&) const = default;
};

/// Production and impact indicators for one (discipline, publisher) cell.
/// total_items == books + chapters and uncited_items <= total_items hold for
/// every row the pipeline emits; the quotients are derived so that
/// avg_cit * total_items == total_citations exactly.
struct IndicatorRow {
  PublisherId publisher;
  std::int64_t total_items = 0;
  std::int64_t books = 0;
  std::int64_t chapters = 0;
  std::int64_t total_citations = 0;
  std::int64_t uncited_items = 0;

  Rational avg_cit() const { return {total_citations, total_items}; }
  Rational non_cit() const { return {uncited_items, total_items}; }

  bool operator==(const IndicatorRow&) const = default;
};

/// Indicator totals for one discipline, summed over all of its publishers.
/// The quotients are recomputed from the summed counts, never averaged
/// over per-publisher rows.
struct DisciplineOverviewRow {
  std::string discipline;
  std::int64_t total_items = 0;
  std::int64_t books = 0;
  std::int64_t chapters = 0;
  std::int64_t total_citations = 0;
  std::int64_t uncited_items = 0;

  Rational avg_cit() const { return {total_citations, total_items}; }
  Rational non_cit() const { return {uncited_items, total_items}; }

  bool operator==(const DisciplineOverviewRow&) const = default;
};

/// Corpus-wide totals; the field_* counts cover records carrying at least
/// one category that maps into the selected disciplines.
struct CorpusSummary {
  std::int64_t total_items = 0;
  std::int64_t total_books = 0;
  std::int64_t total_chapters = 0;
  std::int64_t field_items = 0;
  std::int64_t field_books = 0;
  std::int64_t field_chapters = 0;

  // absent when the divisor is zero
  std::optional<Rational> chapters_per_book() const;
  std::optional<Rational> field_chapters_per_book() const;
  std::optional<Rational> field_share() const;
};

}  // namespace pubcite
