#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qratpp/generator.hpp"
#include "qratpp/pipeline.hpp"

namespace qratpp {

// Differential harnesses: the ground truth for all soundness testing at
// desk scale. Every harness is deterministic in the corpus seed.

struct TruthViolation {
    uint32_t instance = 0;
    std::string qdimacs;
    std::string detail;
};

struct TruthReport {
    uint64_t instances = 0;
    std::vector<TruthViolation> violations;
};

// Generates `spec.count` instances, preprocesses each with the given config
// and compares the outcome against brute-force evaluation of the input:
// SolvedSat must mean true, SolvedUnsat false, and a simplified formula must
// keep the input's truth value.
TruthReport check_truth_preserving(const CorpusSpec& spec, const Config& config);

struct DifferentialReport {
    uint64_t rule_checks = 0;        // sampled (formula, clause, literal) checks
    uint64_t strict_separations = 0; // QRAT+ holds where classic QRAT fails
    uint64_t qbce_holds = 0;
    uint64_t ble_holds = 0;
    uint64_t mode_violations = 0;        // classic holds but QRAT+ fails
    uint64_t subsumption_violations = 0; // QBCE/BLE blocked but QRAT+ check fails
    uint64_t engine_mismatches = 0;      // watched engine vs naive propagator
    std::vector<std::string> violations;

    uint64_t total_violations() const {
        return mode_violations + subsumption_violations + engine_mismatches;
    }
};

// Samples individual redundancy checks and asserts, per sample:
//   - classic QRAT holds  =>  QRAT+ holds   (mode strength)
//   - QBCE blocked        =>  QRAT+ check holds on the same literal
//   - BLE blocked         =>  QRAT+ check holds on the same literal
//   - the watched engine and the naive propagator agree on every check.
// Sampling stops once min_checks is reached. The sample set always contains
// a small seeded family with one existential-then-universal instance whose
// clause-level QAT separates the two modes, so strict_separations >= 1.
DifferentialReport differential_checks(const CorpusSpec& spec, uint64_t min_checks);

struct PropagationDiffReport {
    uint64_t episodes = 0;
    uint64_t with_ur_episodes = 0;
    uint64_t plain_up_episodes = 0;
    uint64_t conflicts = 0;
    std::vector<std::string> mismatches;
};

// Random propagation episodes (both modes, random abstraction indices,
// random assumption sets, optional excluded clause) run through the watched
// engine and the naive propagator. Verdicts and forced-literal sets must
// agree and the watcher-restoration invariant must hold after every episode.
PropagationDiffReport propagation_differential(const CorpusSpec& spec, uint64_t episodes);

} // namespace qratpp
