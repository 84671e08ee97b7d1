#include "qratpp/pcnf.hpp"

#include <algorithm>
#include <stdexcept>

namespace qratpp {

void Pcnf::ensure_var_slot(uint32_t id) {
    if (id >= vars_.size())
        vars_.resize(id + 1);
}

void Pcnf::declare_block(Quantifier q) {
    blocks_.push_back(QuantBlock{q, {}});
}

void Pcnf::declare_variable(uint32_t id) {
    if (id == 0)
        throw std::invalid_argument("variable id 0 is reserved");
    if (blocks_.empty())
        throw std::logic_error("declare_variable before declare_block");
    ensure_var_slot(id);
    if (vars_[id].present)
        throw std::invalid_argument("variable declared twice in prefix");
    vars_[id].present = true;
    vars_[id].quant = blocks_.back().quant;
    blocks_.back().vars.push_back(id);
}

void Pcnf::add_clause(std::vector<Lit> lits) {
    if (normalized_)
        throw std::logic_error("add_clause after normalize");
    for (Lit l : lits) {
        if (l.var() == 0)
            throw std::invalid_argument("literal with variable id 0");
        ensure_var_slot(l.var());
    }
    clauses_.push_back(Clause{std::move(lits), true});
}

bool Pcnf::lit_less(Lit a, Lit b) const {
    uint32_t la = vars_[a.var()].level;
    uint32_t lb = vars_[b.var()].level;
    if (la != lb)
        return la < lb;
    if (a.var() != b.var())
        return a.var() < b.var();
    return !a.negative() && b.negative();
}

Pcnf::NormalizeReport Pcnf::normalize() {
    NormalizeReport report;

    // Bind free variables (used in some clause but absent from the prefix)
    // in an outermost existential block. This runs before tautologies are
    // dropped so that a variable occurring only in a tautological clause
    // still ends up bound.
    std::vector<uint32_t> free_vars;
    for (const Clause& c : clauses_)
        for (Lit l : c.lits)
            if (!vars_[l.var()].present) {
                vars_[l.var()].present = true;
                vars_[l.var()].quant = Quantifier::Existential;
                free_vars.push_back(l.var());
            }
    if (!free_vars.empty()) {
        std::sort(free_vars.begin(), free_vars.end());
        free_vars.erase(std::unique(free_vars.begin(), free_vars.end()), free_vars.end());
        report.free_variables_bound = free_vars.size();
        if (blocks_.empty() || blocks_.front().quant != Quantifier::Existential)
            blocks_.insert(blocks_.begin(), QuantBlock{Quantifier::Existential, {}});
        auto& front = blocks_.front().vars;
        front.insert(front.end(), free_vars.begin(), free_vars.end());
    }

    // Drop empty blocks, merge adjacent blocks of the same quantifier.
    std::vector<QuantBlock> merged;
    for (QuantBlock& b : blocks_) {
        if (b.vars.empty())
            continue;
        if (!merged.empty() && merged.back().quant == b.quant)
            merged.back().vars.insert(merged.back().vars.end(), b.vars.begin(), b.vars.end());
        else
            merged.push_back(std::move(b));
    }
    blocks_ = std::move(merged);

    // Assign 1-based nesting levels; canonical var order inside a block.
    for (size_t i = 0; i < blocks_.size(); ++i) {
        std::sort(blocks_[i].vars.begin(), blocks_[i].vars.end());
        for (uint32_t v : blocks_[i].vars) {
            vars_[v].level = static_cast<uint32_t>(i + 1);
            vars_[v].quant = blocks_[i].quant;
        }
    }

    // Canonicalize clauses: merge duplicate literals, drop tautologies,
    // sort by (level, var, sign).
    std::vector<Clause> kept;
    kept.reserve(clauses_.size());
    for (Clause& c : clauses_) {
        auto& lits = c.lits;
        std::sort(lits.begin(), lits.end());
        size_t before = lits.size();
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        report.duplicate_literals_merged += before - lits.size();
        bool tautological = false;
        for (size_t k = 0; k + 1 < lits.size(); ++k)
            if (lits[k].var() == lits[k + 1].var()) {
                tautological = true;
                break;
            }
        if (tautological) {
            ++report.tautologies_dropped;
            continue;
        }
        std::sort(lits.begin(), lits.end(), [this](Lit a, Lit b) { return lit_less(a, b); });
        kept.push_back(std::move(c));
    }
    clauses_ = std::move(kept);

    // Occurrence lists in ascending clause-id order.
    occ_.assign(2 * (vars_.size() + 1), {});
    live_count_ = 0;
    live_empty_count_ = 0;
    for (uint32_t cid = 0; cid < clauses_.size(); ++cid) {
        if (!clauses_[cid].live)
            continue;
        ++live_count_;
        if (clauses_[cid].lits.empty())
            ++live_empty_count_;
        for (Lit l : clauses_[cid].lits)
            occ_[l.index()].push_back(cid);
    }

    normalized_ = true;
    return report;
}

std::vector<uint32_t> Pcnf::live_clause_ids() const {
    std::vector<uint32_t> ids;
    ids.reserve(live_count_);
    for (uint32_t cid = 0; cid < clauses_.size(); ++cid)
        if (clauses_[cid].live)
            ids.push_back(cid);
    return ids;
}

void Pcnf::kill_clause(uint32_t cid) {
    Clause& c = clauses_[cid];
    if (!c.live)
        return;
    c.live = false;
    --live_count_;
    if (c.lits.empty())
        --live_empty_count_;
}

void Pcnf::remove_literal(uint32_t cid, Lit l) {
    Clause& c = clauses_[cid];
    auto it = std::find(c.lits.begin(), c.lits.end(), l);
    if (it == c.lits.end())
        throw std::logic_error("remove_literal: literal not in clause");
    c.lits.erase(it);
    auto& list = occ_[l.index()];
    list.erase(std::remove(list.begin(), list.end(), cid), list.end());
    if (c.live && c.lits.empty())
        ++live_empty_count_;
}

void Pcnf::compact_occurrences() {
    for (auto& list : occ_)
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [this](uint32_t cid) { return !clauses_[cid].live; }),
                   list.end());
}

std::vector<QuantBlock> Pcnf::canonical_blocks() const {
    std::vector<QuantBlock> out;
    for (const QuantBlock& b : blocks_) {
        QuantBlock filtered{b.quant, {}};
        for (uint32_t v : b.vars) {
            bool used = false;
            for (uint32_t cid : occ_[Lit::positive(v).index()])
                if (clauses_[cid].live) {
                    used = true;
                    break;
                }
            if (!used)
                for (uint32_t cid : occ_[Lit::negative(v).index()])
                    if (clauses_[cid].live) {
                        used = true;
                        break;
                    }
            if (used)
                filtered.vars.push_back(v);
        }
        if (filtered.vars.empty())
            continue;
        if (!out.empty() && out.back().quant == filtered.quant)
            out.back().vars.insert(out.back().vars.end(), filtered.vars.begin(),
                                   filtered.vars.end());
        else
            out.push_back(std::move(filtered));
    }
    return out;
}

FormulaStats compute_stats(const Pcnf& f) {
    FormulaStats s;
    s.clauses = f.live_clause_count();
    s.qblocks = f.canonical_blocks().size();
    for (uint32_t cid = 0; cid < f.clause_count(); ++cid) {
        const Clause& c = f.clause(cid);
        if (!c.live)
            continue;
        for (Lit l : c.lits) {
            if (f.quant_of(l.var()) == Quantifier::Existential)
                ++s.existential_literals;
            else
                ++s.universal_literals;
        }
    }
    return s;
}

namespace {

uint32_t percent_half_up(uint64_t after, uint64_t before) {
    if (before == 0)
        return 100;
    return static_cast<uint32_t>((200 * after + before) / (2 * before));
}

} // namespace

ReductionReport reduction_report(const FormulaStats& before, const FormulaStats& after) {
    ReductionReport r;
    r.clauses_pct = percent_half_up(after.clauses, before.clauses);
    r.qblocks_pct = percent_half_up(after.qblocks, before.qblocks);
    r.existential_pct = percent_half_up(after.existential_literals, before.existential_literals);
    r.universal_pct = percent_half_up(after.universal_literals, before.universal_literals);
    return r;
}

bool structurally_equal(const Pcnf& a, const Pcnf& b) {
    auto ba = a.canonical_blocks();
    auto bb = b.canonical_blocks();
    if (ba.size() != bb.size())
        return false;
    for (size_t i = 0; i < ba.size(); ++i)
        if (ba[i].quant != bb[i].quant || ba[i].vars != bb[i].vars)
            return false;
    auto la = a.live_clause_ids();
    auto lb = b.live_clause_ids();
    if (la.size() != lb.size())
        return false;
    for (size_t i = 0; i < la.size(); ++i)
        if (a.clause(la[i]).lits != b.clause(lb[i]).lits)
            return false;
    return true;
}

bool contains_complementary(const std::vector<Lit>& lits) {
    for (size_t i = 0; i < lits.size(); ++i)
        for (size_t j = i + 1; j < lits.size(); ++j)
            if (lits[i] == ~lits[j])
                return true;
    return false;
}

} // namespace qratpp
