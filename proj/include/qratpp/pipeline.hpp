#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qratpp/pcnf.hpp"
#include "qratpp/rules.hpp"
#include "qratpp/splitmix64.hpp"

namespace qratpp {

struct Config {
    // Technique toggles; the pass order within a round is fixed:
    // QBCE, QAT, QRATE+, BLE, QRATU+.
    bool qbce = true;
    bool qat = true;
    bool qrate = true;
    bool ble = true;
    bool qratu = true;

    CheckMode mode = CheckMode::QratPlus;

    // When set, the clause orders of every pass are shuffled once per outer
    // round with a SplitMix64 stream seeded with (seed + round).
    std::optional<uint64_t> seed;

    std::optional<double> soft_time_limit_seconds;
    std::optional<uint64_t> max_outer_rounds;

    // Disables witness-based scheduling: every round rechecks all live
    // clauses. Same results, more checks; kept for differential testing.
    bool recheck_everything = false;
};

struct Counters {
    uint64_t checks_performed = 0;
    uint64_t clauses_removed = 0;
    uint64_t universal_literals_removed = 0;
    uint64_t rounds = 0;
    bool timed_out = false;

    friend bool operator==(const Counters&, const Counters&) = default;
};

enum class SolveStatus : uint8_t { Simplified, SolvedSat, SolvedUnsat };

struct PreprocessOutcome {
    SolveStatus status = SolveStatus::Simplified;
    Counters counters;
};

// SolvedSat iff there is no live clause, SolvedUnsat iff some live clause is
// empty, nothing otherwise.
std::optional<SolveStatus> detect_solved(const Pcnf& f);

// Fisher-Yates permutation driven by SplitMix64; identical on every
// platform for a given seed.
std::vector<uint32_t> shuffle_order(std::vector<uint32_t> ids, uint64_t seed);
void shuffle_ids(std::vector<uint32_t>& ids, SplitMix64& rng);

// Runs the five elimination passes in fixed order until an outer round
// changes nothing, the round or time limit fires, or the formula is solved.
// The formula is simplified in place; on soft timeout the current state is
// returned with timed_out set.
PreprocessOutcome run_pipeline(Pcnf& f, const Config& config);

} // namespace qratpp
