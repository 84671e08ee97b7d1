#include "qratpp/eval.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qratpp {

namespace {

struct MaskClause {
    uint32_t pos = 0;
    uint32_t neg = 0;
};

struct Expansion {
    const Pcnf* f;
    std::vector<uint32_t> order; // occurring variables in prefix order
    std::vector<uint32_t> slot;  // var id -> bit position
    std::vector<MaskClause> clauses;

    // Truth of the subformula starting at quantifier position k under the
    // partial assignment (pos_a = vars set true, neg_a = vars set false).
    bool recurse(size_t k, uint32_t pos_a, uint32_t neg_a) const {
        bool all_satisfied = true;
        uint32_t assigned = pos_a | neg_a;
        for (const MaskClause& c : clauses) {
            if ((c.pos & pos_a) != 0 || (c.neg & neg_a) != 0)
                continue; // satisfied
            if (((c.pos | c.neg) & ~assigned) == 0)
                return false; // all literals falsified
            all_satisfied = false;
        }
        if (all_satisfied)
            return true;

        uint32_t v = order[k];
        uint32_t bit = 1u << slot[v];
        bool with_true = recurse(k + 1, pos_a | bit, neg_a);
        if (f->quant_of(v) == Quantifier::Existential) {
            if (with_true)
                return true;
            return recurse(k + 1, pos_a, neg_a | bit);
        }
        if (!with_true)
            return false;
        return recurse(k + 1, pos_a, neg_a | bit);
    }
};

} // namespace

bool eval_qbf(const Pcnf& f) {
    size_t prefix_vars = 0;
    for (const QuantBlock& b : f.blocks())
        prefix_vars += b.vars.size();
    if (prefix_vars > 24)
        throw std::invalid_argument("eval_qbf: formula has more than 24 variables");

    Expansion e;
    e.f = &f;
    e.slot.assign(f.max_var_id() + 1, 0);

    std::vector<char> occurs(f.max_var_id() + 1, 0);
    for (uint32_t cid = 0; cid < f.clause_count(); ++cid) {
        const Clause& c = f.clause(cid);
        if (!c.live)
            continue;
        for (Lit l : c.lits)
            occurs[l.var()] = 1;
    }

    // Quantifiers over non-occurring variables are identities and skipped.
    for (const QuantBlock& b : f.blocks())
        for (uint32_t v : b.vars)
            if (occurs[v]) {
                e.slot[v] = static_cast<uint32_t>(e.order.size());
                e.order.push_back(v);
            }

    for (uint32_t cid = 0; cid < f.clause_count(); ++cid) {
        const Clause& c = f.clause(cid);
        if (!c.live)
            continue;
        MaskClause mc;
        for (Lit l : c.lits) {
            uint32_t bit = 1u << e.slot[l.var()];
            if (l.negative())
                mc.neg |= bit;
            else
                mc.pos |= bit;
        }
        e.clauses.push_back(mc);
    }

    return e.recurse(0, 0, 0);
}

} // namespace qratpp
