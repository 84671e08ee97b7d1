#include "qratpp/rules.hpp"

#include <algorithm>
#include <cassert>

namespace qratpp {

std::vector<uint32_t> resolution_neighborhood(const Pcnf& f, Lit l) {
    std::vector<uint32_t> out;
    for (uint32_t cid : f.occurrences(~l))
        if (f.clause(cid).live)
            out.push_back(cid);
    return out;
}

std::vector<Lit> outer_clause(const Pcnf& f, const Clause& d, Lit l) {
    std::vector<Lit> out;
    uint32_t pivot_level = f.level_of(l.var());
    for (Lit k : d.lits) {
        if (k == ~l)
            continue;
        if (f.level_of(k.var()) <= pivot_level)
            out.push_back(k);
    }
    return out;
}

OuterResolvent outer_resolvent(const Pcnf& f, const Clause& c, const Clause& d, Lit l) {
    assert(c.contains(l));
    assert(d.contains(~l));

    bool existential_pivot = f.quant_of(l.var()) == Quantifier::Existential;
    std::vector<Lit> outer = outer_clause(f, d, l);

    // Merge the two canonically ordered literal lists; a variable occurring
    // with both signs makes the resolvent tautological.
    OuterResolvent result;
    auto less = [&](Lit a, Lit b) { return f.lit_less(a, b); };
    size_t ci = 0, oi = 0;
    const auto& cl = c.lits;
    while (ci < cl.size() || oi < outer.size()) {
        if (ci < cl.size() && !existential_pivot && cl[ci] == l) {
            ++ci; // universal pivot is dropped from the resolvent
            continue;
        }
        Lit pick;
        if (oi >= outer.size())
            pick = cl[ci++];
        else if (ci >= cl.size())
            pick = outer[oi++];
        else if (less(cl[ci], outer[oi]))
            pick = cl[ci++];
        else
            pick = outer[oi++];
        if (!result.lits.empty()) {
            Lit last = result.lits.back();
            if (last == pick)
                continue;
            if (last == ~pick) {
                result.tautology = true;
                result.lits.clear();
                return result;
            }
        }
        result.lits.push_back(pick);
    }
    return result;
}

bool check_or_qat(const Pcnf& f, Propagator& prop, const OuterResolvent& orv,
                  CheckMode mode, std::optional<uint32_t> excluded) {
    if (orv.tautology)
        return true;

    AbstractionIndex index;
    PropagationMode pmode;
    if (mode == CheckMode::QratPlus) {
        index = 0;
        for (Lit l : orv.lits)
            index = std::max(index, f.level_of(l.var()));
        pmode = PropagationMode::WithUniversalReduction;
    } else {
        index = f.block_count();
        pmode = PropagationMode::PlainUnitPropagation;
    }

    std::vector<Lit> assumptions;
    assumptions.reserve(orv.lits.size());
    for (Lit l : orv.lits)
        assumptions.push_back(~l);

    return prop.propagate(assumptions, index, pmode, excluded).conflict;
}

bool check_qat_clause(const Pcnf& f, Propagator& prop, uint32_t cid, CheckMode mode) {
    OuterResolvent orv;
    orv.lits = f.clause(cid).lits;
    return check_or_qat(f, prop, orv, mode, cid);
}

CheckResult check_qrat(const Pcnf& f, Propagator& prop, uint32_t cid, Lit l,
                       CheckMode mode) {
    const Clause& c = f.clause(cid);
    assert(c.contains(l));
    for (uint32_t did : resolution_neighborhood(f, l)) {
        OuterResolvent orv = outer_resolvent(f, c, f.clause(did), l);
        if (!check_or_qat(f, prop, orv, mode, cid))
            return CheckResult::fail(did);
    }
    return CheckResult::pass();
}

namespace {

CheckResult all_resolvents_tautological(const Pcnf& f, uint32_t cid, Lit l) {
    const Clause& c = f.clause(cid);
    for (uint32_t did : resolution_neighborhood(f, l))
        if (!outer_resolvent(f, c, f.clause(did), l).tautology)
            return CheckResult::fail(did);
    return CheckResult::pass();
}

} // namespace

CheckResult qbce_blocked(const Pcnf& f, uint32_t cid, Lit l) {
    assert(f.quant_of(l.var()) == Quantifier::Existential);
    return all_resolvents_tautological(f, cid, l);
}

CheckResult ble_blocked(const Pcnf& f, uint32_t cid, Lit l) {
    assert(f.quant_of(l.var()) == Quantifier::Universal);
    return all_resolvents_tautological(f, cid, l);
}

} // namespace qratpp
