#pragma once

#include <string_view>

namespace pubcite {

/// Built-in category -> discipline table (19 disciplines), as TSV text.
std::string_view default_taxonomy_tsv();

/// Built-in publisher alias table, as TSV text.
std::string_view default_aliases_tsv();

}  // namespace pubcite
