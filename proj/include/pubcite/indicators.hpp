#pragma once

#include "pubcite/model.hpp"
#include "pubcite/normalize.hpp"
#include "pubcite/taxonomy.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pubcite {

/// Which document types enter the counts. All is what the standard
/// reports use; the split modes answer "what if we only counted books
/// (or only chapters)?".
enum class CountMode { All, BooksOnly, ChaptersOnly };

CountMode parse_count_mode(std::string_view token);  // "all" | "books" | "chapters"
std::string_view to_string(CountMode mode);

/// Book-series handling. A (discipline, publisher) cell whose
/// chapters-per-book ratio exceeds the threshold is flagged; with
/// action Exclude its chapter records are dropped from the counts
/// (books stay). Cells with zero books have no ratio and are left alone.
struct SeriesPolicy {
  enum class Action { FlagOnly, Exclude };
  std::optional<Rational> threshold;  // > 0 when present
  Action action = Action::FlagOnly;
};

struct SeriesFlag {
  std::string discipline;
  PublisherId publisher;
  std::int64_t books = 0;
  std::int64_t chapters = 0;
  Rational ratio{0};     // chapters / books, defined for every flagged cell
  bool excluded = false; // chapters removed from the aggregation

  bool operator==(const SeriesFlag&) const = default;
};

/// aggregate() output: per discipline, one IndicatorRow per publisher with
/// at least one admitted item, rows sorted by canonical name. Ranking
/// order is applied later, in the report layer.
struct Aggregation {
  std::map<std::string, std::vector<IndicatorRow>> by_discipline;
  std::vector<SeriesFlag> series_flags;
};

/// The aggregation core. A record contributes once to every discipline its
/// categories map into; citations are attributed wholly to the record.
/// Sharded execution (shards > 1) partitions records and merges partial
/// sums; the result is identical for any shard count and any record order.
Aggregation aggregate(const Corpus& corpus, const AliasTable& aliases, const Taxonomy& taxonomy,
                      CountMode mode = CountMode::All, const SeriesPolicy& series = {},
                      unsigned shards = 1);

/// Component-wise sums per discipline, ordered by discipline name.
std::vector<DisciplineOverviewRow> discipline_overview(const Aggregation& aggregation);

/// Corpus-wide totals ignoring the discipline mapping; the field_* counts
/// cover records with at least one category mapping into
/// selected_disciplines.
CorpusSummary corpus_summary(const Corpus& corpus, const Taxonomy& taxonomy,
                             const std::vector<std::string>& selected_disciplines);

/// selected_disciplines defaults to every taxonomy discipline.
CorpusSummary corpus_summary(const Corpus& corpus, const Taxonomy& taxonomy);

/// One row of the series diagnostic: chapters-per-book per
/// (discipline, publisher). ratio is absent when books == 0.
struct SeriesRow {
  std::string discipline;
  PublisherId publisher;
  std::int64_t books = 0;
  std::int64_t chapters = 0;
  std::optional<Rational> ratio;

  bool operator==(const SeriesRow&) const = default;
};

/// Sorted by ratio descending; rows with no ratio (chapters but zero
/// books) come first, as the extreme case. Ties break on
/// (discipline, publisher).
std::vector<SeriesRow> series_diagnostic(const Corpus& corpus, const AliasTable& aliases,
                                         const Taxonomy& taxonomy);

/// Pearson correlation between total_items and books across rows.
/// Empty when fewer than two rows or either variable is constant.
std::optional<double> correlation_items_books(const std::vector<IndicatorRow>& rows);

}  // namespace pubcite
