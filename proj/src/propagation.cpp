#include "qratpp/propagation.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qratpp {

bool universal_reducible(const Pcnf& f, Lit lit, std::span<const Lit> clause_view,
                         AbstractionIndex i) {
    if (is_existential_under(f, lit.var(), i))
        return false;
    uint32_t level = f.level_of(lit.var());
    for (Lit k : clause_view)
        if (is_existential_under(f, k.var(), i) && f.level_of(k.var()) > level)
            return false;
    return true;
}

namespace {

void require_plain_up_full_abstraction(const Pcnf& f, AbstractionIndex index,
                                       PropagationMode mode) {
    if (mode == PropagationMode::PlainUnitPropagation && index != f.block_count())
        throw std::logic_error("plain unit propagation requires the full abstraction");
}

} // namespace

PropagationOutcome propagate_naive(const Pcnf& f, std::span<const Lit> assumptions,
                                   AbstractionIndex index, PropagationMode mode,
                                   std::optional<uint32_t> excluded_clause) {
    require_plain_up_full_abstraction(f, index, mode);

    std::vector<int8_t> value(f.max_var_id() + 1, 0);
    auto lit_value = [&](Lit l) {
        int8_t v = value[l.var()];
        return l.negative() ? static_cast<int8_t>(-v) : v;
    };

    PropagationOutcome out;
    std::vector<Lit> trail;
    auto assign = [&](Lit l) {
        value[l.var()] = l.negative() ? -1 : 1;
        trail.push_back(l);
    };

    for (Lit a : assumptions) {
        assert(is_existential_under(f, a.var(), index));
        int8_t v = lit_value(a);
        if (v > 0)
            continue;
        if (v < 0) {
            out.conflict = true;
            return out;
        }
        assign(a);
    }

    std::vector<Lit> remainder;
    bool changed = true;
    while (changed) {
        changed = false;
        for (uint32_t cid = 0; cid < f.clause_count(); ++cid) {
            if (!f.clause(cid).live || (excluded_clause && *excluded_clause == cid))
                continue;
            const Clause& c = f.clause(cid);
            bool satisfied = false;
            remainder.clear();
            for (Lit l : c.lits) {
                int8_t v = lit_value(l);
                if (v > 0) {
                    satisfied = true;
                    break;
                }
                if (v == 0)
                    remainder.push_back(l);
            }
            if (satisfied)
                continue;

            size_t existential_count = 0;
            Lit unit_candidate;
            uint32_t max_existential_level = 0;
            for (Lit l : remainder)
                if (is_existential_under(f, l.var(), index)) {
                    ++existential_count;
                    unit_candidate = l;
                    max_existential_level =
                        std::max(max_existential_level, f.level_of(l.var()));
                }

            size_t effective = existential_count;
            if (mode == PropagationMode::WithUniversalReduction) {
                // A universal literal survives reduction iff an existential
                // literal of the remainder sits deeper.
                for (Lit l : remainder)
                    if (!is_existential_under(f, l.var(), index) &&
                        f.level_of(l.var()) < max_existential_level)
                        ++effective;
            } else {
                effective = remainder.size();
            }

            if (effective == 0) {
                out.conflict = true;
                return out;
            }
            if (effective == 1 && existential_count == 1) {
                assign(unit_candidate);
                changed = true;
            }
        }
    }

    out.closure = std::move(trail);
    return out;
}

QbcpEngine::QbcpEngine(const Pcnf& f) : formula_(&f) {
    value_.assign(f.max_var_id() + 1, 0);
    watch_occ_.assign(2 * (f.max_var_id() + 1), {});
    scan_occ_.assign(2 * (f.max_var_id() + 1), {});
    watched_.assign(f.clause_count(), {Lit{}, Lit{}});
    is_watched_clause_.assign(f.clause_count(), 0);

    for (uint32_t cid = 0; cid < f.clause_count(); ++cid) {
        const Clause& c = f.clause(cid);
        if (!c.live)
            continue;
        Lit w[2];
        int found = 0;
        for (Lit l : c.lits) {
            if (f.quant_of(l.var()) != Quantifier::Existential)
                continue;
            w[found++] = l;
            if (found == 2)
                break;
        }
        if (found == 2) {
            is_watched_clause_[cid] = 1;
            watched_[cid] = {w[0], w[1]};
            watch_occ_[w[0].index()].push_back(cid);
            watch_occ_[w[1].index()].push_back(cid);
        } else {
            scan_list_.push_back(cid);
            for (Lit l : c.lits)
                scan_occ_[l.index()].push_back(cid);
        }
    }
}

void QbcpEngine::enqueue(Lit l) {
    assert(value_[l.var()] == 0);
    assert(is_existential_under(*formula_, l.var(), index_));
    value_[l.var()] = l.negative() ? -1 : 1;
    trail_.push_back(l);
}

// Full evaluation of a scan-list clause under the current assignment. Scan
// clauses have fewer than two input-existential literals, so conflicts and
// units here may hinge on universal reduction alone.
bool QbcpEngine::evaluate_scan_clause(uint32_t cid) {
    const Pcnf& f = *formula_;
    const Clause& c = f.clause(cid);

    size_t existential_count = 0;
    size_t universal_count = 0;
    Lit unit_candidate;
    uint32_t max_existential_level = 0;
    for (Lit l : c.lits) {
        int8_t v = lit_value(l);
        if (v > 0)
            return true; // satisfied
        if (v < 0)
            continue;
        if (is_existential_under(f, l.var(), index_)) {
            ++existential_count;
            unit_candidate = l;
            max_existential_level = std::max(max_existential_level, f.level_of(l.var()));
        } else {
            ++universal_count;
        }
    }

    size_t effective = existential_count;
    if (mode_ == PropagationMode::WithUniversalReduction) {
        for (Lit l : c.lits)
            if (lit_value(l) == 0 && !is_existential_under(f, l.var(), index_) &&
                f.level_of(l.var()) < max_existential_level)
                ++effective;
    } else {
        effective = existential_count + universal_count;
    }

    if (effective == 0)
        return false;
    if (effective == 1 && existential_count == 1 && lit_value(unit_candidate) == 0)
        enqueue(unit_candidate);
    return true;
}

QbcpEngine::VisitResult QbcpEngine::visit_watched(uint32_t cid, Lit falsified) {
    const Pcnf& f = *formula_;
    auto& w = watched_[cid];
    int slot = (w[0] == falsified) ? 0 : 1;
    assert(w[slot] == falsified);
    Lit other = w[1 - slot];

    if (lit_value(other) > 0)
        return VisitResult::Kept;

    const Clause& c = f.clause(cid);
    for (Lit l : c.lits) {
        if (l == other || l == falsified)
            continue;
        if (!is_existential_under(f, l.var(), index_))
            continue;
        if (lit_value(l) < 0)
            continue;
        // Replacement found: migrate the watcher. The caller removes the
        // entry from the list being traversed.
        w[slot] = l;
        watch_occ_[l.index()].push_back(cid);
        moves_.push_back({cid, slot, falsified, l});
        return VisitResult::Moved;
    }

    if (lit_value(other) < 0)
        return VisitResult::Conflict;

    // `other` is the only unfalsified literal existential under the index.
    // A surviving outer universal literal keeps the clause from being unit.
    if (mode_ == PropagationMode::WithUniversalReduction) {
        uint32_t other_level = f.level_of(other.var());
        for (Lit l : c.lits)
            if (!is_existential_under(f, l.var(), index_) &&
                f.level_of(l.var()) < other_level)
                return VisitResult::Kept;
    }
    enqueue(other);
    return VisitResult::Kept;
}

PropagationOutcome QbcpEngine::propagate(std::span<const Lit> assumptions,
                                         AbstractionIndex index, PropagationMode mode,
                                         std::optional<uint32_t> excluded_clause) {
    const Pcnf& f = *formula_;
    require_plain_up_full_abstraction(f, index, mode);
    assert(trail_.empty() && moves_.empty());

    index_ = index;
    mode_ = mode;
    excluded_ = excluded_clause;

    PropagationOutcome out;
    bool conflict = false;

    for (Lit a : assumptions) {
        int8_t v = lit_value(a);
        if (v > 0)
            continue;
        if (v < 0) {
            conflict = true;
            break;
        }
        enqueue(a);
    }

    // Clauses on the scan list can be conflicting or unit before any
    // assignment (an all-universal clause reduces to the empty clause), so
    // sweep them once up front.
    if (!conflict)
        for (uint32_t cid : scan_list_) {
            if (!f.clause(cid).live || (excluded_ && *excluded_ == cid))
                continue;
            if (!evaluate_scan_clause(cid)) {
                conflict = true;
                break;
            }
        }

    while (!conflict && qhead_ < trail_.size()) {
        Lit p = trail_[qhead_++];
        Lit falsified = ~p;

        for (uint32_t cid : scan_occ_[falsified.index()]) {
            if (!f.clause(cid).live || (excluded_ && *excluded_ == cid))
                continue;
            if (!evaluate_scan_clause(cid)) {
                conflict = true;
                break;
            }
        }
        if (conflict)
            break;

        auto& wl = watch_occ_[falsified.index()];
        size_t k = 0;
        while (k < wl.size()) {
            uint32_t cid = wl[k];
            if (!f.clause(cid).live || (excluded_ && *excluded_ == cid)) {
                ++k;
                continue;
            }
            VisitResult r = visit_watched(cid, falsified);
            if (r == VisitResult::Moved) {
                wl[k] = wl.back();
                wl.pop_back();
                continue;
            }
            if (r == VisitResult::Conflict) {
                conflict = true;
                break;
            }
            ++k;
        }
    }

    out.conflict = conflict;
    if (!conflict)
        out.closure = trail_;
    retract();
    return out;
}

void QbcpEngine::retract() {
    for (Lit l : trail_)
        value_[l.var()] = 0;
    trail_.clear();
    qhead_ = 0;

    // Undo watcher migrations in reverse so the watchers end up on the
    // input-existential literals they started the episode with.
    for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) {
        assert(watched_[it->cid][it->slot] == it->to);
        auto& from_list = watch_occ_[it->to.index()];
        auto pos = std::find(from_list.begin(), from_list.end(), it->cid);
        assert(pos != from_list.end());
        *pos = from_list.back();
        from_list.pop_back();
        watched_[it->cid][it->slot] = it->from;
        watch_occ_[it->from.index()].push_back(it->cid);
    }
    moves_.clear();
}

void QbcpEngine::compact() {
    const Pcnf& f = *formula_;
    auto dead = [&](uint32_t cid) { return !f.clause(cid).live; };
    for (auto& list : watch_occ_)
        list.erase(std::remove_if(list.begin(), list.end(), dead), list.end());
    scan_list_.erase(std::remove_if(scan_list_.begin(), scan_list_.end(), dead),
                     scan_list_.end());
    for (uint32_t idx = 0; idx < scan_occ_.size(); ++idx) {
        Lit l = Lit::from_index(idx);
        auto& list = scan_occ_[idx];
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](uint32_t cid) {
                                      return dead(cid) || !f.clause(cid).contains(l);
                                  }),
                   list.end());
    }
}

bool QbcpEngine::watchers_restored() const {
    const Pcnf& f = *formula_;
    if (!trail_.empty() || !moves_.empty())
        return false;
    for (uint32_t cid = 0; cid < f.clause_count(); ++cid) {
        if (!is_watched_clause_[cid] || !f.clause(cid).live)
            continue;
        const auto& w = watched_[cid];
        if (w[0] == w[1])
            return false;
        for (Lit l : w) {
            if (f.quant_of(l.var()) != Quantifier::Existential)
                return false;
            if (!f.clause(cid).contains(l))
                return false;
            const auto& list = watch_occ_[l.index()];
            if (std::count(list.begin(), list.end(), cid) != 1)
                return false;
        }
    }
    return true;
}

} // namespace qratpp
