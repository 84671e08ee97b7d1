#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qratpp/pcnf.hpp"

namespace qratpp {

// Index i of the implicit prefix abstraction: every variable at nesting
// level <= i is treated as existential during propagation. i = block count
// is the full abstraction.
using AbstractionIndex = uint32_t;

enum class PropagationMode : uint8_t {
    WithUniversalReduction, // QBCP: unit propagation + universal reduction
    PlainUnitPropagation,   // propositional UP; requires the full abstraction
};

inline bool is_existential_under(const Pcnf& f, uint32_t var, AbstractionIndex i) {
    return f.quant_of(var) == Quantifier::Existential || f.level_of(var) <= i;
}

// True iff lit is universal under i and no literal of the given clause view
// that is existential under i sits at a deeper nesting level. Callers pass
// the unfalsified remainder of a clause; reduction is computed on that.
bool universal_reducible(const Pcnf& f, Lit lit, std::span<const Lit> clause_view,
                         AbstractionIndex i);

struct PropagationOutcome {
    bool conflict = false;
    // Assumptions plus forced literals in assignment order; empty on conflict.
    std::vector<Lit> closure;
};

class Propagator {
public:
    virtual ~Propagator() = default;

    // Least closure of: assume the assumptions, delete falsified literals,
    // delete universal-reducible literals (WithUniversalReduction only),
    // force the literal of any single-literal remainder that is existential
    // under i, and report Conflict on an empty remainder. Never assigns a
    // variable that is universal under i. `excluded_clause` removes one
    // clause from the view for the duration of the call.
    //
    // Assumptions must not contain a complementary pair (callers resolve
    // that case to Conflict up front); a pair is still answered with
    // Conflict rather than undefined behavior.
    virtual PropagationOutcome propagate(std::span<const Lit> assumptions,
                                         AbstractionIndex index, PropagationMode mode,
                                         std::optional<uint32_t> excluded_clause) = 0;
};

// Reference propagator: repeated full scans until fixpoint. Used as the
// differential oracle for the watched engine.
PropagationOutcome propagate_naive(const Pcnf& f, std::span<const Lit> assumptions,
                                   AbstractionIndex index, PropagationMode mode,
                                   std::optional<uint32_t> excluded_clause = {});

class NaivePropagator final : public Propagator {
public:
    explicit NaivePropagator(const Pcnf& f) : formula_(&f) {}

    PropagationOutcome propagate(std::span<const Lit> assumptions, AbstractionIndex index,
                                 PropagationMode mode,
                                 std::optional<uint32_t> excluded_clause) override {
        return propagate_naive(*formula_, assumptions, index, mode, excluded_clause);
    }

private:
    const Pcnf* formula_;
};

// Watched-literal QBCP engine. Clauses with at least two literals that are
// existential in the input prefix watch two of those; the rest sit on a
// scan list that is evaluated directly. Watchers may migrate to literals
// that are only existential under the episode's abstraction; retraction at
// the end of an episode restores them to input-existential literals, which
// keeps the watcher tables valid for any later abstraction index.
class QbcpEngine final : public Propagator {
public:
    explicit QbcpEngine(const Pcnf& f);

    PropagationOutcome propagate(std::span<const Lit> assumptions, AbstractionIndex index,
                                 PropagationMode mode,
                                 std::optional<uint32_t> excluded_clause) override;

    // Drops dead clauses (and stale scan entries) from the internal lists.
    void compact();

    // Post-episode invariant: every live watched clause watches two distinct
    // input-existential literals it still contains, and the watch lists
    // agree with the per-clause watcher slots.
    bool watchers_restored() const;

private:
    enum class VisitResult { Kept, Moved, Conflict };

    int8_t lit_value(Lit l) const {
        int8_t v = value_[l.var()];
        return l.negative() ? static_cast<int8_t>(-v) : v;
    }

    void enqueue(Lit l);
    bool evaluate_scan_clause(uint32_t cid); // returns false on conflict
    VisitResult visit_watched(uint32_t cid, Lit falsified);
    void retract();

    const Pcnf* formula_;
    std::vector<int8_t> value_; // by var: +1 true, -1 false, 0 unassigned
    std::vector<Lit> trail_;
    size_t qhead_ = 0;

    std::vector<std::vector<uint32_t>> watch_occ_; // by Lit::index()
    std::vector<std::array<Lit, 2>> watched_;      // by clause id
    std::vector<char> is_watched_clause_;          // by clause id
    std::vector<uint32_t> scan_list_;
    std::vector<std::vector<uint32_t>> scan_occ_; // by Lit::index()

    struct WatchMove {
        uint32_t cid;
        int slot;
        Lit from;
        Lit to;
    };
    std::vector<WatchMove> moves_;

    // episode parameters
    AbstractionIndex index_ = 0;
    PropagationMode mode_ = PropagationMode::WithUniversalReduction;
    std::optional<uint32_t> excluded_;
};

} // namespace qratpp
