#include "qratpp/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "qratpp/propagation.hpp"

namespace qratpp {

std::optional<SolveStatus> detect_solved(const Pcnf& f) {
    if (f.live_clause_count() == 0)
        return SolveStatus::SolvedSat;
    if (f.live_empty_clause_count() > 0)
        return SolveStatus::SolvedUnsat;
    return std::nullopt;
}

void shuffle_ids(std::vector<uint32_t>& ids, SplitMix64& rng) {
    for (size_t i = ids.size(); i > 1; --i)
        std::swap(ids[i - 1], ids[rng.below(i)]);
}

std::vector<uint32_t> shuffle_order(std::vector<uint32_t> ids, uint64_t seed) {
    SplitMix64 rng(seed);
    shuffle_ids(ids, rng);
    return ids;
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Technique { Qbce, Qat, QratePlus, Ble, QratuPlus };

class PipelineRun {
public:
    PipelineRun(Pcnf& f, const Config& config)
        : f_(f), config_(config), engine_(f),
          is_witness_(f.clause_count(), 0), pending_(f.clause_count()),
          in_worklist_(f.clause_count(), 0) {
        if (config.soft_time_limit_seconds)
            deadline_ = Clock::now() +
                        std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(*config.soft_time_limit_seconds));
    }

    PreprocessOutcome run();

private:
    PreprocessOutcome finish(SolveStatus status) { return {status, counters_}; }

    bool deadline_hit() const { return deadline_ && Clock::now() >= *deadline_; }

    void record_witness(uint32_t witness, uint32_t blocked) {
        is_witness_[witness] = 1;
        auto& p = pending_[witness];
        if (std::find(p.begin(), p.end(), blocked) == p.end())
            p.push_back(blocked);
    }

    // Clauses to recheck once d is gone: the resolution neighborhoods of all
    // of d's literals when d was marked as a witness, plus every clause
    // whose failed check recorded d as its blocker.
    std::vector<uint32_t> on_clause_removed(uint32_t d) {
        std::set<uint32_t> out;
        if (is_witness_[d]) {
            is_witness_[d] = 0;
            for (Lit l : f_.clause(d).lits)
                for (uint32_t cid : f_.occurrences(~l))
                    if (f_.clause(cid).live)
                        out.insert(cid);
        }
        for (uint32_t cid : pending_[d])
            if (f_.clause(cid).live)
                out.insert(cid);
        pending_[d].clear();
        return {out.begin(), out.end()};
    }

    bool clause_check(Technique tech, uint32_t cid);
    std::optional<PreprocessOutcome> clause_pass(Technique tech,
                                                 const std::vector<uint32_t>& queue);
    std::optional<PreprocessOutcome> literal_pass(Technique tech);

    Pcnf& f_;
    const Config& config_;
    QbcpEngine engine_;
    Counters counters_;

    std::vector<char> is_witness_;
    std::vector<std::vector<uint32_t>> pending_;
    std::vector<char> in_worklist_;
    std::set<uint32_t> next_queue_;

    bool round_changed_ = false;
    bool literal_removed_ = false;
    SplitMix64* round_rng_ = nullptr;
    std::optional<Clock::time_point> deadline_;
};

bool PipelineRun::clause_check(Technique tech, uint32_t cid) {
    const Clause& c = f_.clause(cid);
    switch (tech) {
    case Technique::Qbce:
        for (Lit l : c.lits) {
            if (f_.quant_of(l.var()) != Quantifier::Existential)
                continue;
            CheckResult r = qbce_blocked(f_, cid, l);
            if (r.holds)
                return true;
            record_witness(r.witness, cid);
        }
        return false;
    case Technique::Qat:
        return check_qat_clause(f_, engine_, cid, config_.mode);
    case Technique::QratePlus:
        for (Lit l : c.lits) {
            if (f_.quant_of(l.var()) != Quantifier::Existential)
                continue;
            CheckResult r = check_qrat(f_, engine_, cid, l, config_.mode);
            if (r.holds)
                return true;
            record_witness(r.witness, cid);
        }
        return false;
    default:
        return false;
    }
}

std::optional<PreprocessOutcome> PipelineRun::clause_pass(
    Technique tech, const std::vector<uint32_t>& queue) {
    std::vector<uint32_t> work = queue;
    if (round_rng_)
        shuffle_ids(work, *round_rng_);
    for (uint32_t cid : work)
        in_worklist_[cid] = 1;

    size_t pos = 0;
    while (pos < work.size()) {
        uint32_t cid = work[pos++];
        in_worklist_[cid] = 0;
        if (!f_.clause(cid).live)
            continue;
        if (deadline_hit()) {
            counters_.timed_out = true;
            return finish(SolveStatus::Simplified);
        }

        ++counters_.checks_performed;
        if (!clause_check(tech, cid))
            continue;

        f_.kill_clause(cid);
        ++counters_.clauses_removed;
        round_changed_ = true;
        if (f_.live_clause_count() == 0)
            return finish(SolveStatus::SolvedSat);

        for (uint32_t r : on_clause_removed(cid)) {
            next_queue_.insert(r);
            // QBCE is cheap and runs to its own fixpoint within the pass.
            if (tech == Technique::Qbce && !in_worklist_[r]) {
                in_worklist_[r] = 1;
                work.push_back(r);
            }
        }
    }

    f_.compact_occurrences();
    engine_.compact();
    return std::nullopt;
}

std::optional<PreprocessOutcome> PipelineRun::literal_pass(Technique tech) {
    std::vector<uint32_t> order = f_.live_clause_ids();
    if (round_rng_)
        shuffle_ids(order, *round_rng_);

    bool sweep_changed;
    do {
        sweep_changed = false;
        for (uint32_t cid : order) {
            if (!f_.clause(cid).live)
                continue;
            // Literals are cleaned up eagerly, so re-fetch the universal
            // literal at position uidx after every removal.
            size_t uidx = 0;
            while (true) {
                Lit l;
                bool found = false;
                size_t seen = 0;
                for (Lit k : f_.clause(cid).lits)
                    if (f_.quant_of(k.var()) == Quantifier::Universal) {
                        if (seen == uidx) {
                            l = k;
                            found = true;
                            break;
                        }
                        ++seen;
                    }
                if (!found)
                    break;
                if (deadline_hit()) {
                    counters_.timed_out = true;
                    return finish(SolveStatus::Simplified);
                }

                ++counters_.checks_performed;
                CheckResult r = tech == Technique::Ble
                                    ? ble_blocked(f_, cid, l)
                                    : check_qrat(f_, engine_, cid, l, config_.mode);
                if (!r.holds) {
                    record_witness(r.witness, cid);
                    ++uidx;
                    continue;
                }

                f_.remove_literal(cid, l);
                ++counters_.universal_literals_removed;
                round_changed_ = true;
                literal_removed_ = true;
                sweep_changed = true;
                next_queue_.insert(cid);
                if (f_.clause(cid).lits.empty())
                    return finish(SolveStatus::SolvedUnsat);
            }
        }
    } while (tech == Technique::Ble && sweep_changed);

    f_.compact_occurrences();
    engine_.compact();
    return std::nullopt;
}

PreprocessOutcome PipelineRun::run() {
    if (auto solved = detect_solved(f_))
        return finish(*solved);

    std::vector<uint32_t> queue = f_.live_clause_ids();
    while (true) {
        ++counters_.rounds;
        round_changed_ = false;
        literal_removed_ = false;
        next_queue_.clear();

        SplitMix64 rng(config_.seed ? *config_.seed + counters_.rounds : 0);
        round_rng_ = config_.seed ? &rng : nullptr;

        if (config_.qbce)
            if (auto r = clause_pass(Technique::Qbce, queue))
                return *r;
        if (config_.qat)
            if (auto r = clause_pass(Technique::Qat, queue))
                return *r;
        if (config_.qrate)
            if (auto r = clause_pass(Technique::QratePlus, queue))
                return *r;
        if (config_.ble)
            if (auto r = literal_pass(Technique::Ble))
                return *r;
        if (config_.qratu)
            if (auto r = literal_pass(Technique::QratuPlus))
                return *r;

        if (!round_changed_)
            break;
        if (config_.max_outer_rounds && counters_.rounds >= *config_.max_outer_rounds)
            break;

        // Shortening a clause strengthens propagation for every check, so a
        // round that removed literals schedules a full recheck. Rounds with
        // only clause removals recheck the witness-scheduled set.
        if (config_.recheck_everything || literal_removed_)
            queue = f_.live_clause_ids();
        else
            queue.assign(next_queue_.begin(), next_queue_.end());
    }

    return finish(SolveStatus::Simplified);
}

} // namespace

PreprocessOutcome run_pipeline(Pcnf& f, const Config& config) {
    if (!f.normalized())
        throw std::logic_error("run_pipeline requires a normalized formula");
    return PipelineRun(f, config).run();
}

} // namespace qratpp
