#include "qratpp/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qratpp {

void CorpusSpec::validate() const {
    if (max_vars == 0 || max_vars > 12)
        throw std::invalid_argument("CorpusSpec: max_vars must be in [1, 12]");
    if (max_blocks == 0 || max_clause_len == 0)
        throw std::invalid_argument("CorpusSpec: max_blocks and max_clause_len must be positive");
}

std::string random_qdimacs(SplitMix64& rng, const CorpusSpec& spec) {
    spec.validate();

    uint32_t nvars = 1 + static_cast<uint32_t>(rng.below(spec.max_vars));
    uint32_t nblocks =
        1 + static_cast<uint32_t>(rng.below(std::min(spec.max_blocks, nvars)));
    uint32_t nclauses = static_cast<uint32_t>(rng.below(spec.max_clauses + 1));

    // Split [1, nvars] into nblocks contiguous ranges via distinct cut points.
    std::vector<uint32_t> cuts;
    {
        std::vector<uint32_t> positions(nvars - 1);
        std::iota(positions.begin(), positions.end(), 1u);
        for (uint32_t k = 0; k < nblocks - 1; ++k) {
            size_t pick = k + rng.below(positions.size() - k);
            std::swap(positions[k], positions[pick]);
            cuts.push_back(positions[k]);
        }
        std::sort(cuts.begin(), cuts.end());
    }
    cuts.push_back(nvars);

    bool existential_first = rng.below(2) == 0;

    std::string out;
    out += "p cnf " + std::to_string(nvars) + " " + std::to_string(nclauses) + "\n";
    uint32_t v = 1;
    for (size_t b = 0; b < cuts.size(); ++b) {
        bool existential = (b % 2 == 0) == existential_first;
        out += existential ? "e" : "a";
        for (; v <= cuts[b]; ++v) {
            out += ' ';
            out += std::to_string(v);
        }
        out += " 0\n";
    }

    std::vector<uint32_t> pool(nvars);
    for (uint32_t c = 0; c < nclauses; ++c) {
        uint32_t len =
            1 + static_cast<uint32_t>(rng.below(std::min(spec.max_clause_len, nvars)));
        std::iota(pool.begin(), pool.end(), 1u);
        for (uint32_t k = 0; k < len; ++k) {
            size_t pick = k + rng.below(pool.size() - k);
            std::swap(pool[k], pool[pick]);
            bool negative = rng.below(2) == 1;
            out += std::to_string(negative ? -static_cast<int64_t>(pool[k])
                                           : static_cast<int64_t>(pool[k]));
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

} // namespace qratpp
