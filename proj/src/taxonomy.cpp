#include "pubcite/taxonomy.hpp"

#include "pubcite/defaults.hpp"
#include "pubcite/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pubcite {

Taxonomy Taxonomy::parse(std::istream& in) {
  Taxonomy taxonomy;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = text::trim_ascii(line);
    if (sv.empty() || sv.front() == '#') continue;
    auto fields = text::split(sv, '\t');
    if (fields.size() != 2) {
      throw MalformedLine(line_no, "taxonomy line must have exactly 2 tab-separated columns");
    }
    std::string_view category = text::trim_ascii(fields[0]);
    std::string_view discipline = text::trim_ascii(fields[1]);
    if (category.empty() || discipline.empty()) {
      throw MalformedLine(line_no, "taxonomy line with empty column");
    }
    std::string key = text::fold_key(category);
    auto [it, inserted] = taxonomy.by_category_.emplace(key, std::string(discipline));
    if (!inserted && it->second != discipline) throw DuplicateCategory(std::string(category));
    if (std::find(taxonomy.disciplines_.begin(), taxonomy.disciplines_.end(), discipline) ==
        taxonomy.disciplines_.end()) {
      taxonomy.disciplines_.emplace_back(discipline);
    }
  }
  return taxonomy;
}

Taxonomy Taxonomy::parse_text(std::string_view content) {
  std::istringstream in{std::string(content)};
  return parse(in);
}

Taxonomy Taxonomy::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open taxonomy file: " + path);
  return parse(in);
}

Taxonomy Taxonomy::builtin_default() {
  return parse_text(default_taxonomy_tsv());
}

bool Taxonomy::has_discipline(std::string_view name) const {
  return std::find(disciplines_.begin(), disciplines_.end(), name) != disciplines_.end();
}

std::optional<std::string> Taxonomy::discipline_for(std::string_view category) const {
  auto it = by_category_.find(text::fold_key(category));
  if (it == by_category_.end()) return std::nullopt;
  return it->second;
}

std::set<std::string> Taxonomy::disciplines_for(const std::vector<std::string>& categories) const {
  std::set<std::string> out;
  for (const auto& category : categories) {
    if (auto discipline = discipline_for(category)) out.insert(*discipline);
  }
  return out;
}

}  // namespace pubcite
