#include "qratpp/harness.hpp"

#include <algorithm>

#include "qratpp/eval.hpp"
#include "qratpp/qdimacs.hpp"

namespace qratpp {

TruthReport check_truth_preserving(const CorpusSpec& spec, const Config& config) {
    spec.validate();
    TruthReport report;
    SplitMix64 rng(spec.seed);
    for (uint32_t k = 0; k < spec.count; ++k) {
        std::string text = random_qdimacs(rng, spec);
        ParseResult parsed = parse_qdimacs(text);
        bool truth = eval_qbf(parsed.formula);

        Pcnf work = parsed.formula;
        PreprocessOutcome outcome = run_pipeline(work, config);

        ++report.instances;
        std::string detail;
        switch (outcome.status) {
        case SolveStatus::SolvedSat:
            if (!truth)
                detail = "solved SAT but input evaluates to false";
            break;
        case SolveStatus::SolvedUnsat:
            if (truth)
                detail = "solved UNSAT but input evaluates to true";
            break;
        case SolveStatus::Simplified:
            if (eval_qbf(work) != truth)
                detail = "simplified formula changed the truth value";
            break;
        }
        if (!detail.empty())
            report.violations.push_back({k, text, detail});
    }
    return report;
}

namespace {

// Two clauses under an existential-then-universal prefix whose clause-level
// QAT holds with universal reduction on the partial abstraction but fails
// under propositional propagation on the full abstraction.
const char* kModeSeparationInstance = "p cnf 3 2\n"
                                      "e 1 2 0\n"
                                      "a 3 0\n"
                                      "1 2 0\n"
                                      "2 3 0\n";

} // namespace

DifferentialReport differential_checks(const CorpusSpec& spec, uint64_t min_checks) {
    spec.validate();
    DifferentialReport report;
    SplitMix64 rng(spec.seed);

    uint32_t instance = 0;
    bool seeded_family_done = false;
    while (report.rule_checks < min_checks) {
        std::string text;
        if (!seeded_family_done) {
            text = kModeSeparationInstance;
            seeded_family_done = true;
        } else {
            text = random_qdimacs(rng, spec);
        }
        ParseResult parsed = parse_qdimacs(text);
        const Pcnf& f = parsed.formula;
        QbcpEngine watched(f);
        NaivePropagator naive(f);

        auto note = [&](uint64_t& counter, uint32_t cid, Lit l, const std::string& what) {
            ++counter;
            report.violations.push_back("instance " + std::to_string(instance) +
                                        " clause " + std::to_string(cid) + " literal " +
                                        std::to_string(l.to_dimacs()) + ": " + what);
        };

        for (uint32_t cid : f.live_clause_ids()) {
            // Clause-level QAT in both modes, cross-checked against the
            // naive propagator.
            bool qat_plus = check_qat_clause(f, watched, cid, CheckMode::QratPlus);
            bool qat_classic = check_qat_clause(f, watched, cid, CheckMode::QratClassic);
            if (qat_plus != check_qat_clause(f, naive, cid, CheckMode::QratPlus) ||
                qat_classic != check_qat_clause(f, naive, cid, CheckMode::QratClassic))
                note(report.engine_mismatches, cid, Lit::positive(1),
                     "watched/naive disagree on clause QAT");
            if (qat_classic && !qat_plus)
                note(report.mode_violations, cid, Lit::positive(1),
                     "clause QAT holds classically but not in QRAT+");
            if (qat_plus && !qat_classic)
                ++report.strict_separations;

            for (Lit l : f.clause(cid).lits) {
                ++report.rule_checks;
                CheckResult plus = check_qrat(f, watched, cid, l, CheckMode::QratPlus);
                CheckResult classic = check_qrat(f, watched, cid, l, CheckMode::QratClassic);
                CheckResult plus_naive = check_qrat(f, naive, cid, l, CheckMode::QratPlus);
                if (plus.holds != plus_naive.holds ||
                    (!plus.holds && plus.witness != plus_naive.witness))
                    note(report.engine_mismatches, cid, l,
                         "watched/naive disagree on QRAT+ check");
                if (classic.holds && !plus.holds)
                    note(report.mode_violations, cid, l, "classic QRAT holds but QRAT+ fails");
                if (plus.holds && !classic.holds)
                    ++report.strict_separations;

                if (f.quant_of(l.var()) == Quantifier::Existential) {
                    CheckResult blocked = qbce_blocked(f, cid, l);
                    if (blocked.holds) {
                        ++report.qbce_holds;
                        if (!plus.holds)
                            note(report.subsumption_violations, cid, l,
                                 "QBCE blocked but QRAT+ check fails");
                    }
                } else {
                    CheckResult blocked = ble_blocked(f, cid, l);
                    if (blocked.holds) {
                        ++report.ble_holds;
                        if (!plus.holds)
                            note(report.subsumption_violations, cid, l,
                                 "BLE blocked but QRAT+ check fails");
                    }
                }
            }

            if (!watched.watchers_restored())
                note(report.engine_mismatches, cid, Lit::positive(1),
                     "watchers not restored after checks");
        }
        ++instance;
    }
    return report;
}

PropagationDiffReport propagation_differential(const CorpusSpec& spec, uint64_t episodes) {
    spec.validate();
    PropagationDiffReport report;
    SplitMix64 rng(spec.seed);

    constexpr uint64_t kEpisodesPerInstance = 32;

    while (report.episodes < episodes) {
        std::string text = random_qdimacs(rng, spec);
        ParseResult parsed = parse_qdimacs(text);
        const Pcnf& f = parsed.formula;
        QbcpEngine watched(f);

        for (uint64_t e = 0; e < kEpisodesPerInstance && report.episodes < episodes; ++e) {
            PropagationMode mode = report.episodes % 2 == 0
                                       ? PropagationMode::WithUniversalReduction
                                       : PropagationMode::PlainUnitPropagation;
            AbstractionIndex index =
                mode == PropagationMode::PlainUnitPropagation
                    ? f.block_count()
                    : static_cast<AbstractionIndex>(rng.below(f.block_count() + 1));

            // Assumption sets draw distinct variables that are existential
            // under the chosen index, with random signs.
            std::vector<uint32_t> candidates;
            for (uint32_t v = 1; v <= f.max_var_id(); ++v)
                if (f.has_variable(v) && is_existential_under(f, v, index))
                    candidates.push_back(v);
            std::vector<Lit> assumptions;
            if (!candidates.empty()) {
                size_t n = rng.below(candidates.size() + 1);
                for (size_t k = 0; k < n; ++k) {
                    size_t pick = k + rng.below(candidates.size() - k);
                    std::swap(candidates[k], candidates[pick]);
                    assumptions.push_back(rng.below(2) == 0
                                              ? Lit::positive(candidates[k])
                                              : Lit::negative(candidates[k]));
                }
            }

            std::optional<uint32_t> excluded;
            if (f.clause_count() > 0 && rng.below(4) == 0)
                excluded = static_cast<uint32_t>(rng.below(f.clause_count()));

            PropagationOutcome fast = watched.propagate(assumptions, index, mode, excluded);
            PropagationOutcome slow = propagate_naive(f, assumptions, index, mode, excluded);

            ++report.episodes;
            if (mode == PropagationMode::WithUniversalReduction)
                ++report.with_ur_episodes;
            else
                ++report.plain_up_episodes;
            if (fast.conflict)
                ++report.conflicts;

            auto mismatch = [&](const std::string& what) {
                report.mismatches.push_back("episode " + std::to_string(report.episodes) +
                                            ": " + what + "\n" + text);
            };
            if (fast.conflict != slow.conflict) {
                mismatch("conflict verdicts differ");
                continue;
            }
            if (!fast.conflict) {
                auto a = fast.closure;
                auto b = slow.closure;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b)
                    mismatch("forced-literal sets differ");
            }
            if (!watched.watchers_restored())
                mismatch("watcher-restoration invariant violated");
        }
    }
    return report;
}

} // namespace qratpp
