#pragma once

#include <cstdint>
#include <vector>

#include "qratpp/literal.hpp"

namespace qratpp {

// Clauses live in a stable arena inside the Pcnf; the index in that arena is
// the clause id. Elimination only flips the `live` flag, so ids stay valid
// for occurrence lists, watcher tables and witness bookkeeping.
struct Clause {
    std::vector<Lit> lits; // canonical order: (nesting level, var, sign)
    bool live = true;

    bool contains(Lit l) const {
        for (Lit k : lits)
            if (k == l)
                return true;
        return false;
    }
};

struct QuantBlock {
    Quantifier quant = Quantifier::Existential;
    std::vector<uint32_t> vars; // ascending after normalization
};

// Formula size metrics over live clauses and the canonical (used-variable)
// prefix view: clause count, qblock count, and existential/universal literal
// occurrence counts.
struct FormulaStats {
    uint64_t clauses = 0;
    uint64_t qblocks = 0;
    uint64_t existential_literals = 0;
    uint64_t universal_literals = 0;

    friend bool operator==(const FormulaStats&, const FormulaStats&) = default;
};

// after/before per metric, in percent, rounded half-up. A zero denominator
// reports 100 by convention.
struct ReductionReport {
    uint32_t clauses_pct = 100;
    uint32_t qblocks_pct = 100;
    uint32_t existential_pct = 100;
    uint32_t universal_pct = 100;

    friend bool operator==(const ReductionReport&, const ReductionReport&) = default;
};

// A prenex CNF: an ordered sequence of quantifier blocks over a clause
// matrix. Construction happens through declare_block/declare_variable/
// add_clause followed by a single normalize() call, which
//   - binds free variables in an outermost existential block,
//   - drops empty blocks and merges adjacent blocks of equal quantifier,
//   - assigns 1-based nesting levels,
//   - merges duplicate literals, drops tautological clauses, and sorts
//     each clause by (level, var, sign),
//   - builds per-literal occurrence lists (ascending clause ids).
// After normalization the only permitted mutations are kill_clause and
// remove_literal (lazy clause deletion, eager literal deletion).
class Pcnf {
public:
    struct NormalizeReport {
        uint64_t tautologies_dropped = 0;
        uint64_t duplicate_literals_merged = 0;
        uint64_t free_variables_bound = 0;
    };

    // construction
    void declare_block(Quantifier q);
    void declare_variable(uint32_t id); // throws on redeclaration or id 0
    void add_clause(std::vector<Lit> lits);
    NormalizeReport normalize();

    // prefix queries
    uint32_t block_count() const { return static_cast<uint32_t>(blocks_.size()); }
    const std::vector<QuantBlock>& blocks() const { return blocks_; }
    bool has_variable(uint32_t v) const {
        return v < vars_.size() && vars_[v].present;
    }
    uint32_t level_of(uint32_t v) const { return vars_[v].level; }
    Quantifier quant_of(uint32_t v) const { return vars_[v].quant; }
    uint32_t max_var_id() const {
        return vars_.empty() ? 0 : static_cast<uint32_t>(vars_.size() - 1);
    }

    // clause queries
    size_t clause_count() const { return clauses_.size(); } // arena size
    size_t live_clause_count() const { return live_count_; }
    size_t live_empty_clause_count() const { return live_empty_count_; }
    const Clause& clause(uint32_t cid) const { return clauses_[cid]; }
    std::vector<uint32_t> live_clause_ids() const;

    // Occurrence list for l; may still contain dead clause ids until the
    // next compact_occurrences(), callers filter on Clause::live.
    const std::vector<uint32_t>& occurrences(Lit l) const {
        return occ_[l.index()];
    }

    // mutation after normalization
    void kill_clause(uint32_t cid);
    void remove_literal(uint32_t cid, Lit l);
    void compact_occurrences();

    // Prefix restricted to variables with at least one live occurrence:
    // unused variables dropped, empty blocks dropped, adjacent equal
    // quantifiers merged. This is the view exported by the QDIMACS writer.
    std::vector<QuantBlock> canonical_blocks() const;

    bool lit_less(Lit a, Lit b) const; // canonical (level, var, sign) order

    bool normalized() const { return normalized_; }

private:
    struct VarInfo {
        uint32_t level = 0;
        Quantifier quant = Quantifier::Existential;
        bool present = false;
    };

    void ensure_var_slot(uint32_t id);

    std::vector<VarInfo> vars_; // indexed by variable id, slot 0 unused
    std::vector<QuantBlock> blocks_;
    std::vector<Clause> clauses_;
    std::vector<std::vector<uint32_t>> occ_; // indexed by Lit::index()
    size_t live_count_ = 0;
    size_t live_empty_count_ = 0;
    bool normalized_ = false;
};

FormulaStats compute_stats(const Pcnf& f);
ReductionReport reduction_report(const FormulaStats& before, const FormulaStats& after);

// Equality of canonical prefixes and the live clause sequences.
bool structurally_equal(const Pcnf& a, const Pcnf& b);

// True iff the literal list contains some {l, ~l} pair.
bool contains_complementary(const std::vector<Lit>& lits);

} // namespace qratpp
