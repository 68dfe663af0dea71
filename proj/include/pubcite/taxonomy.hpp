#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pubcite {

/// Flat mapping from subject-category names to discipline names.
/// Category matching is case- and whitespace-insensitive but otherwise
/// exact; discipline display strings are kept as written.
class Taxonomy {
 public:
  Taxonomy() = default;

  /// TSV `category<TAB>discipline`, `#` comments and blank lines ignored.
  /// Throws DuplicateCategory when one category maps to two disciplines.
  static Taxonomy parse(std::istream& in);
  static Taxonomy parse_text(std::string_view text);
  static Taxonomy parse_file(const std::string& path);

  /// The 19-discipline mapping shipped with the tool.
  static Taxonomy builtin_default();

  /// Discipline display names in first-appearance order.
  const std::vector<std::string>& disciplines() const { return disciplines_; }
  bool has_discipline(std::string_view name) const;

  std::optional<std::string> discipline_for(std::string_view category) const;

  /// Deduplicated disciplines of all mapped categories; unmapped
  /// categories contribute nothing, so the result may be empty.
  std::set<std::string> disciplines_for(const std::vector<std::string>& categories) const;

  std::size_t category_count() const { return by_category_.size(); }

 private:
  std::map<std::string, std::string> by_category_;  // normalized category key -> discipline
  std::vector<std::string> disciplines_;
};

}  // namespace pubcite
