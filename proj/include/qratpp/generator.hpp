#pragma once

#include <cstdint>
#include <string>

#include "qratpp/splitmix64.hpp"

namespace qratpp {

// Shape of the random PCNF corpus used by the verification harnesses.
// Clauses draw distinct variables, so generated instances are free of
// tautologies and duplicate literals by construction. max_vars is capped at
// 12 to keep brute-force evaluation trivial.
struct CorpusSpec {
    uint32_t max_vars = 8;
    uint32_t max_blocks = 3;
    uint32_t max_clauses = 16;
    uint32_t max_clause_len = 4;
    uint32_t count = 10000;
    uint64_t seed = 1;

    void validate() const; // throws std::invalid_argument
};

// One random instance as QDIMACS text, consuming the given stream. Quantifier
// types alternate between adjacent blocks; all variables are bound.
std::string random_qdimacs(SplitMix64& rng, const CorpusSpec& spec);

} // namespace qratpp
