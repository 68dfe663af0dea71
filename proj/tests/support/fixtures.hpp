#pragma once

#include <string>

// Deterministic fixture corpora. The generated bytes are frozen: the
// checked-in tests/data files must equal these outputs exactly (see the
// fixture integrity test), so any change here is a deliberate data change.
namespace pubcite::fixtures {

// FIX-ILS: a synthetic Information Science & Library Science corpus whose
// per-publisher aggregates over 2006-2011 equal the reference ranking's 23
// rows (counts, citations, and uncited counts chosen to reproduce every
// printed percentage). Also contains out-of-window records (2005/2012)
// that the default year window must drop: 4,695 records in total.
std::string fix_ils_tsv();

// FIX-ALL: a mixed corpus covering all 19 disciplines, multi-category
// records, publisher name variants, out-of-window years, orphan chapters
// and unmapped categories. Values are not frozen; tests compare against
// the naive oracle.
std::string fix_all_tsv();

}  // namespace pubcite::fixtures
