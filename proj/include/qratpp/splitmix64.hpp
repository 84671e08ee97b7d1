#pragma once

#include <cstdint>

namespace qratpp {

// SplitMix64 (Steele/Lea/Flood). The state advances by the 64-bit golden
// ratio constant 0x9E3779B97F4A7C15 and the output is finalized with the
// published mixing constants, so sequences are identical on every platform.
// This is the generator behind all reproducible shuffling and corpus
// generation in this project; see README for the exact derivation of
// per-round shuffle streams.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound). Plain modulo; the bias is irrelevant
    // for shuffling and test-case generation and keeps results reproducible.
    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

} // namespace qratpp
