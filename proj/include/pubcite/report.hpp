#pragma once

#include "pubcite/indicators.hpp"
#include "pubcite/ingest.hpp"
#include "pubcite/model.hpp"
#include "pubcite/normalize.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pubcite {

enum class Format { Csv, Json, Markdown };

Format parse_format(std::string_view token);  // "csv" | "json" | "md"; throws UnsupportedFormat

/// How the chapters-per-book quotient is printed: integer part only
/// (the reports' house style) or rounded to two decimals.
enum class CpbMode { Floor, TwoDecimals };

CpbMode parse_cpb_mode(std::string_view token);  // "floor" | "decimals"

/// Ranking order: total_items descending, ties by canonical name
/// ascending. A total order, so any input permutation renders
/// byte-identical output.
std::vector<IndicatorRow> rank_discipline(std::vector<IndicatorRow> rows);

/// Round-half-up at the second decimal; always exactly two decimals.
/// Input must be non-negative.
std::string round_avg(const Rational& value);

/// Round-half-up(100 * value) with a "%" suffix. Input in [0, 1].
std::string round_pct(const Rational& value);

/// "12" in Floor mode, "12.76" in TwoDecimals mode.
std::string render_chapters_per_book(const Rational& value, CpbMode mode);

/// Everything one command renders. Rankings are already in display order.
struct ReportSet {
  std::vector<std::pair<std::string, std::vector<IndicatorRow>>> rankings;
  std::optional<std::vector<DisciplineOverviewRow>> overview;
  std::optional<CorpusSummary> summary;
  CpbMode cpb_mode = CpbMode::Floor;
};

/// Renders a report set to bytes. Byte-identical for identical inputs.
/// CSV: UTF-8, LF endings, RFC-4180-style quoting; a single ranking table
/// uses the plain header `publisher,total_items,books,chapters,
/// total_citations,avg_cit,non_cit_pct`, two or more tables are flattened
/// with a leading `discipline` column. JSON: one document, counts as
/// integers plus the rendered strings. Markdown: one pipe table per
/// discipline.
std::string render(const ReportSet& report, Format format);

/// The summary as ordered (key, value) pairs; shared by every renderer.
std::vector<std::pair<std::string, std::string>> summary_lines(const CorpusSummary& summary,
                                                               CpbMode mode);

/// Plain `key: value` lines for the corpus summary.
std::string render_summary(const CorpusSummary& summary, CpbMode mode);

std::string render_audit(const AuditReport& report, Format format);

std::string render_series(const std::vector<SeriesRow>& rows, Format format);

std::string render_warnings(const std::vector<Warning>& warnings);

}  // namespace pubcite
