#pragma once

#include "pubcite/model.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pubcite {

/// Deterministic, idempotent publisher-name key:
/// ASCII letters uppercased, `-` turned into a space, the characters
/// . , ' " dropped, `&` kept, Unicode whitespace runs collapsed to a
/// single space, ends trimmed. Throws EmptyAfterNormalization when
/// nothing remains.
std::string normalize_key(std::string_view raw);

/// Variant-key -> canonical-name table. Keys and canonical names are both
/// stored in normalize_key form; chains (a canonical that is itself a
/// variant of something else) are rejected at load.
class AliasTable {
 public:
  AliasTable() = default;

  /// TSV `variant<TAB>canonical`, UTF-8, `#` comment lines and blank lines
  /// ignored. Both columns are passed through normalize_key.
  static AliasTable parse(std::istream& in);
  static AliasTable parse_text(std::string_view text);
  static AliasTable parse_file(const std::string& path);

  /// The table shipped with the tool (Springer headquarters variants).
  static AliasTable builtin_default();

  std::optional<std::string_view> lookup(std::string_view normalized_key) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
  void insert(const std::string& variant_raw, const std::string& canonical_raw, int line_no);
  void check_chains() const;
};

/// normalize_key + alias lookup. Pure; idempotent for a fixed table.
PublisherId canonicalize(std::string_view raw, const AliasTable& aliases);

/// The distinct raw strings that resolved to one canonical publisher.
struct VariantCluster {
  PublisherId publisher;
  std::vector<std::pair<std::string, std::int64_t>> variants;  // raw string, frequency
};

/// Two canonical names whose token sets differ by exactly one token
/// (e.g. "ROUTLEDGE" vs "ROUTLEDGE LTD"). Advisory only.
struct NearMissPair {
  PublisherId left;
  PublisherId right;
};

struct AuditReport {
  std::vector<VariantCluster> clusters;     // sorted by canonical name
  std::vector<NearMissPair> near_misses;    // sorted pairs, left < right
};

AuditReport audit_variants(const Corpus& corpus, const AliasTable& aliases);

}  // namespace pubcite
