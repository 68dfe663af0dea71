#include "pubcite/normalize.hpp"

#include "pubcite/defaults.hpp"
#include "pubcite/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pubcite {

std::string normalize_key(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  std::size_t i = 0;
  while (i < raw.size()) {
    std::size_t len = 0;
    bool valid = false;
    char32_t cp = text::decode_utf8(raw, i, len, valid);
    if ((valid && text::is_unicode_space(cp)) || cp == U'-') {
      pending_space = true;
      i += len;
      continue;
    }
    if (cp == U'.' || cp == U',' || cp == U'\'' || cp == U'"') {
      i += len;
      continue;
    }
    if (!out.empty() && pending_space) out.push_back(' ');
    pending_space = false;
    if (!valid) {
      // Malformed bytes become U+FFFD. Copying them through raw would break
      // idempotence: adjacent stray bytes can re-combine into a valid
      // whitespace sequence on the next pass.
      out.append("\xEF\xBF\xBD");
    } else if (cp >= 'a' && cp <= 'z') {
      out.push_back(static_cast<char>(cp - 32));
    } else {
      out.append(raw.substr(i, len));
    }
    i += len;
  }
  if (out.empty()) throw EmptyAfterNormalization(std::string(raw));
  return out;
}

void AliasTable::insert(const std::string& variant_raw, const std::string& canonical_raw, int line_no) {
  std::string key;
  std::string canonical;
  try {
    key = normalize_key(variant_raw);
    canonical = normalize_key(canonical_raw);
  } catch (const EmptyAfterNormalization&) {
    throw MalformedLine(line_no, "alias entry empty after normalization");
  }
  auto [it, inserted] = entries_.emplace(key, canonical);
  if (!inserted && it->second != canonical) throw ConflictingAlias(key);
}

void AliasTable::check_chains() const {
  for (const auto& [key, canonical] : entries_) {
    auto it = entries_.find(canonical);
    if (it != entries_.end() && it->second != canonical) {
      throw AliasChain(canonical, it->second);
    }
  }
}

AliasTable AliasTable::parse(std::istream& in) {
  AliasTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = text::trim_ascii(line);
    if (sv.empty() || sv.front() == '#') continue;
    auto fields = text::split(sv, '\t');
    if (fields.size() != 2) {
      throw MalformedLine(line_no, "alias line must have exactly 2 tab-separated columns");
    }
    std::string_view variant = text::trim_ascii(fields[0]);
    std::string_view canonical = text::trim_ascii(fields[1]);
    if (variant.empty() || canonical.empty()) {
      throw MalformedLine(line_no, "alias line with empty column");
    }
    table.insert(std::string(variant), std::string(canonical), line_no);
  }
  table.check_chains();
  return table;
}

AliasTable AliasTable::parse_text(std::string_view content) {
  std::istringstream in{std::string(content)};
  return parse(in);
}

AliasTable AliasTable::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open alias file: " + path);
  return parse(in);
}

AliasTable AliasTable::builtin_default() {
  return parse_text(default_aliases_tsv());
}

std::optional<std::string_view> AliasTable::lookup(std::string_view normalized_key) const {
  auto it = entries_.find(std::string(normalized_key));
  if (it == entries_.end()) return std::nullopt;
  return std::string_view(it->second);
}

PublisherId canonicalize(std::string_view raw, const AliasTable& aliases) {
  std::string key = normalize_key(raw);
  if (auto canonical = aliases.lookup(key)) return PublisherId{std::string(*canonical)};
  return PublisherId{std::move(key)};
}

namespace {

std::set<std::string> token_set(std::string_view name) {
  std::set<std::string> tokens;
  for (auto part : text::split(name, ' ')) {
    if (!part.empty()) tokens.emplace(part);
  }
  return tokens;
}

// True when one token set is the other plus exactly one extra token.
bool single_token_apart(const std::set<std::string>& a, const std::set<std::string>& b) {
  const auto& small = a.size() < b.size() ? a : b;
  const auto& big = a.size() < b.size() ? b : a;
  if (big.size() != small.size() + 1) return false;
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

AuditReport audit_variants(const Corpus& corpus, const AliasTable& aliases) {
  std::map<std::string, std::map<std::string, std::int64_t>> clusters;
  for (const auto& record : corpus.records) {
    PublisherId id = canonicalize(record.raw_publisher, aliases);
    clusters[id.canonical_name][record.raw_publisher] += 1;
  }

  AuditReport report;
  report.clusters.reserve(clusters.size());
  for (auto& [canonical, variants] : clusters) {
    VariantCluster cluster;
    cluster.publisher = PublisherId{canonical};
    cluster.variants.assign(variants.begin(), variants.end());
    report.clusters.push_back(std::move(cluster));
  }

  std::vector<std::pair<std::string, std::set<std::string>>> keyed;
  keyed.reserve(report.clusters.size());
  for (const auto& cluster : report.clusters) {
    keyed.emplace_back(cluster.publisher.canonical_name, token_set(cluster.publisher.canonical_name));
  }
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    for (std::size_t j = i + 1; j < keyed.size(); ++j) {
      if (single_token_apart(keyed[i].second, keyed[j].second)) {
        report.near_misses.push_back({PublisherId{keyed[i].first}, PublisherId{keyed[j].first}});
      }
    }
  }
  return report;
}

}  // namespace pubcite
