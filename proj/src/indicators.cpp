#include "pubcite/indicators.hpp"

#include "pubcite/errors.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace pubcite {

CountMode parse_count_mode(std::string_view token) {
  if (token == "all") return CountMode::All;
  if (token == "books") return CountMode::BooksOnly;
  if (token == "chapters") return CountMode::ChaptersOnly;
  throw Error("invalid count mode: \"" + std::string(token) + "\" (expected all|books|chapters)");
}

std::string_view to_string(CountMode mode) {
  switch (mode) {
    case CountMode::All: return "all";
    case CountMode::BooksOnly: return "books";
    case CountMode::ChaptersOnly: return "chapters";
  }
  return "all";
}

namespace {

// Per-(discipline, publisher) sums, split by document type so that count
// modes and series exclusion stay additive.
struct Accum {
  std::int64_t books = 0;
  std::int64_t chapters = 0;
  std::int64_t book_citations = 0;
  std::int64_t chapter_citations = 0;
  std::int64_t uncited_books = 0;
  std::int64_t uncited_chapters = 0;

  void merge(const Accum& other) {
    books += other.books;
    chapters += other.chapters;
    book_citations += other.book_citations;
    chapter_citations += other.chapter_citations;
    uncited_books += other.uncited_books;
    uncited_chapters += other.uncited_chapters;
  }
};

using CellMap = std::map<std::string, std::map<std::string, Accum>>;  // discipline -> publisher -> sums

void accumulate(const BibRecord& record, const AliasTable& aliases, const Taxonomy& taxonomy,
                CellMap& cells) {
  const auto disciplines = taxonomy.disciplines_for(record.categories);
  if (disciplines.empty()) return;
  const PublisherId publisher = canonicalize(record.raw_publisher, aliases);
  for (const auto& discipline : disciplines) {
    Accum& accum = cells[discipline][publisher.canonical_name];
    if (record.is_book()) {
      accum.books += 1;
      accum.book_citations += record.citations;
      if (record.citations == 0) accum.uncited_books += 1;
    } else {
      accum.chapters += 1;
      accum.chapter_citations += record.citations;
      if (record.citations == 0) accum.uncited_chapters += 1;
    }
  }
}

CellMap build_cells(const Corpus& corpus, const AliasTable& aliases, const Taxonomy& taxonomy,
                    unsigned shards) {
  if (shards <= 1 || corpus.records.size() < 2 * shards) {
    CellMap cells;
    for (const auto& record : corpus.records) accumulate(record, aliases, taxonomy, cells);
    return cells;
  }

  std::vector<CellMap> partials(shards);
  std::vector<std::thread> workers;
  workers.reserve(shards);
  for (unsigned shard = 0; shard < shards; ++shard) {
    workers.emplace_back([&, shard] {
      for (std::size_t i = shard; i < corpus.records.size(); i += shards) {
        accumulate(corpus.records[i], aliases, taxonomy, partials[shard]);
      }
    });
  }
  for (auto& worker : workers) worker.join();

  // Sums commute, so merging in shard order yields the sequential result.
  CellMap cells = std::move(partials[0]);
  for (unsigned shard = 1; shard < shards; ++shard) {
    for (auto& [discipline, publishers] : partials[shard]) {
      auto& target = cells[discipline];
      for (auto& [publisher, accum] : publishers) target[publisher].merge(accum);
    }
  }
  return cells;
}

}  // namespace

Aggregation aggregate(const Corpus& corpus, const AliasTable& aliases, const Taxonomy& taxonomy,
                      CountMode mode, const SeriesPolicy& series, unsigned shards) {
  if (series.threshold && *series.threshold <= Rational{0}) {
    throw Error("series threshold must be positive");
  }

  CellMap cells = build_cells(corpus, aliases, taxonomy, shards);

  Aggregation result;
  for (auto& [discipline, publishers] : cells) {
    for (auto& [publisher, accum] : publishers) {
      if (series.threshold && accum.books > 0) {
        Rational ratio{accum.chapters, accum.books};
        if (ratio > *series.threshold) {
          bool exclude = series.action == SeriesPolicy::Action::Exclude;
          result.series_flags.push_back(
              {discipline, PublisherId{publisher}, accum.books, accum.chapters, ratio, exclude});
          if (exclude) {
            accum.chapters = 0;
            accum.chapter_citations = 0;
            accum.uncited_chapters = 0;
          }
        }
      }

      IndicatorRow row;
      row.publisher = PublisherId{publisher};
      switch (mode) {
        case CountMode::All:
          row.books = accum.books;
          row.chapters = accum.chapters;
          row.total_citations = accum.book_citations + accum.chapter_citations;
          row.uncited_items = accum.uncited_books + accum.uncited_chapters;
          break;
        case CountMode::BooksOnly:
          row.books = accum.books;
          row.total_citations = accum.book_citations;
          row.uncited_items = accum.uncited_books;
          break;
        case CountMode::ChaptersOnly:
          row.chapters = accum.chapters;
          row.total_citations = accum.chapter_citations;
          row.uncited_items = accum.uncited_chapters;
          break;
      }
      row.total_items = row.books + row.chapters;
      if (row.total_items == 0) continue;  // zero-item publishers are omitted
      result.by_discipline[discipline].push_back(std::move(row));
    }
  }
  // map iteration already yields rows sorted by publisher name
  return result;
}

std::vector<DisciplineOverviewRow> discipline_overview(const Aggregation& aggregation) {
  std::vector<DisciplineOverviewRow> overview;
  overview.reserve(aggregation.by_discipline.size());
  for (const auto& [discipline, rows] : aggregation.by_discipline) {
    DisciplineOverviewRow total;
    total.discipline = discipline;
    for (const auto& row : rows) {
      total.total_items += row.total_items;
      total.books += row.books;
      total.chapters += row.chapters;
      total.total_citations += row.total_citations;
      total.uncited_items += row.uncited_items;
    }
    overview.push_back(std::move(total));
  }
  return overview;
}

CorpusSummary corpus_summary(const Corpus& corpus, const Taxonomy& taxonomy,
                             const std::vector<std::string>& selected_disciplines) {
  const std::set<std::string> selected(selected_disciplines.begin(), selected_disciplines.end());
  CorpusSummary summary;
  for (const auto& record : corpus.records) {
    summary.total_items += 1;
    (record.is_book() ? summary.total_books : summary.total_chapters) += 1;

    bool in_field = false;
    for (const auto& discipline : taxonomy.disciplines_for(record.categories)) {
      if (selected.contains(discipline)) {
        in_field = true;
        break;
      }
    }
    if (in_field) {
      summary.field_items += 1;
      (record.is_book() ? summary.field_books : summary.field_chapters) += 1;
    }
  }
  return summary;
}

CorpusSummary corpus_summary(const Corpus& corpus, const Taxonomy& taxonomy) {
  return corpus_summary(corpus, taxonomy, taxonomy.disciplines());
}

std::vector<SeriesRow> series_diagnostic(const Corpus& corpus, const AliasTable& aliases,
                                         const Taxonomy& taxonomy) {
  Aggregation aggregation = aggregate(corpus, aliases, taxonomy);
  std::vector<SeriesRow> rows;
  for (const auto& [discipline, indicator_rows] : aggregation.by_discipline) {
    for (const auto& row : indicator_rows) {
      SeriesRow series_row;
      series_row.discipline = discipline;
      series_row.publisher = row.publisher;
      series_row.books = row.books;
      series_row.chapters = row.chapters;
      if (row.books > 0) series_row.ratio = Rational{row.chapters, row.books};
      rows.push_back(std::move(series_row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SeriesRow& a, const SeriesRow& b) {
    // undefined ratios (chapters with zero books) sort first, as the
    // extreme case of the distortion
    if (a.ratio.has_value() != b.ratio.has_value()) return !a.ratio.has_value();
    if (a.ratio.has_value() && *a.ratio != *b.ratio) return *a.ratio > *b.ratio;
    if (a.discipline != b.discipline) return a.discipline < b.discipline;
    return a.publisher < b.publisher;
  });
  return rows;
}

std::optional<double> correlation_items_books(const std::vector<IndicatorRow>& rows) {
  if (rows.size() < 2) return std::nullopt;
  const double n = static_cast<double>(rows.size());
  double mean_items = 0.0;
  double mean_books = 0.0;
  for (const auto& row : rows) {
    mean_items += static_cast<double>(row.total_items);
    mean_books += static_cast<double>(row.books);
  }
  mean_items /= n;
  mean_books /= n;

  double covariance = 0.0;
  double var_items = 0.0;
  double var_books = 0.0;
  for (const auto& row : rows) {
    const double di = static_cast<double>(row.total_items) - mean_items;
    const double db = static_cast<double>(row.books) - mean_books;
    covariance += di * db;
    var_items += di * di;
    var_books += db * db;
  }
  if (var_items == 0.0 || var_books == 0.0) return std::nullopt;
  return covariance / std::sqrt(var_items * var_books);
}

}  // namespace pubcite
