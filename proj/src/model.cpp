#include "pubcite/model.hpp"

#include "pubcite/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace pubcite {

namespace {

std::int64_t parse_int64(std::string_view s, std::string_view what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error("invalid " + std::string(what) + ": \"" + std::string(s) + "\"");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  std::string_view s = text::trim_ascii(raw);
  if (s.empty()) throw Error("invalid rational: empty string");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int64(s.substr(0, slash), "rational numerator");
    std::int64_t den = parse_int64(s.substr(slash + 1), "rational denominator");
    if (den == 0) throw Error("invalid rational: zero denominator in \"" + std::string(s) + "\"");
    return {num, den};
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 9) {
      throw Error("invalid rational: \"" + std::string(s) + "\"");
    }
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::int64_t whole = int_part.empty() || int_part == "-"
                             ? 0
                             : parse_int64(int_part, "rational integer part");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t frac = parse_int64(frac_part, "rational fraction digits");
    if (frac < 0) throw Error("invalid rational: \"" + std::string(s) + "\"");
    std::int64_t num = std::abs(whole) * scale + frac;
    return {negative ? -num : num, scale};
  }
  return {parse_int64(s, "rational"), 1};
}

bool same_records(const Corpus& a, const Corpus& b) {
  if (a.records.size() != b.records.size()) return false;
  auto by_id = [](const BibRecord& x, const BibRecord& y) { return x.record_id < y.record_id; };
  std::vector<BibRecord> lhs = a.records;
  std::vector<BibRecord> rhs = b.records;
  std::sort(lhs.begin(), lhs.end(), by_id);
  std::sort(rhs.begin(), rhs.end(), by_id);
  return lhs == rhs;
}

std::optional<Rational> CorpusSummary::chapters_per_book() const {
  if (total_books == 0) return std::nullopt;
  return Rational{total_chapters, total_books};
}

std::optional<Rational> CorpusSummary::field_chapters_per_book() const {
  if (field_books == 0) return std::nullopt;
  return Rational{field_chapters, field_books};
}

std::optional<Rational> CorpusSummary::field_share() const {
  if (total_items == 0) return std::nullopt;
  return Rational{field_items, total_items};
}

}  // namespace pubcite
