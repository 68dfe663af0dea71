#pragma once

#include "pubcite/model.hpp"

#include <random>

// Random but reproducible corpora for the oracle/determinism properties.
// Every draw goes through explicit modulo arithmetic on the mt19937_64
// stream, so the same seed yields the same corpus on every platform.
namespace pubcite::testsupport {

Corpus random_corpus(std::mt19937_64& rng, std::size_t max_records = 500);

}  // namespace pubcite::testsupport
