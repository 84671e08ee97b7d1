#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qratpp/pcnf.hpp"
#include "qratpp/propagation.hpp"

namespace qratpp {

// QRAT+ uses the partial abstraction determined by the maximum nesting
// level of the tested literal set, together with QBCP (unit propagation
// plus universal reduction). Classic QRAT always uses the full abstraction
// with propositional unit propagation.
enum class CheckMode : uint8_t { QratPlus, QratClassic };

struct OuterResolvent {
    bool tautology = false;
    std::vector<Lit> lits; // canonical order; empty when tautology
};

struct CheckResult {
    bool holds = true;
    uint32_t witness = 0; // lowest-id failing neighbor, valid when !holds

    static CheckResult pass() { return {}; }
    static CheckResult fail(uint32_t cid) { return {false, cid}; }
};

// Ids of all live clauses containing ~l, ascending. The clause under test
// never shows up: it contains l and is tautology-free.
std::vector<uint32_t> resolution_neighborhood(const Pcnf& f, Lit l);

// The outer part of neighbor d with respect to pivot l: literals of d other
// than ~l whose nesting level does not exceed l's.
std::vector<Lit> outer_clause(const Pcnf& f, const Clause& d, Lit l);

// Outer resolvent of c and d on pivot l (l in c, ~l in d). An existential
// pivot keeps all of c, a universal pivot drops l; a complementary pair in
// the union yields the Tautology variant.
OuterResolvent outer_resolvent(const Pcnf& f, const Clause& c, const Clause& d, Lit l);

// QAT test for a literal set: negate it, propagate on the abstraction
// selected by the mode, and report whether the empty clause was derived.
// Tautological resolvents hold trivially. `excluded` is the clause under
// test, which is not part of the propagation view.
bool check_or_qat(const Pcnf& f, Propagator& prop, const OuterResolvent& orv,
                  CheckMode mode, std::optional<uint32_t> excluded);

// Clause-level QAT: the clause itself is the tested literal set.
bool check_qat_clause(const Pcnf& f, Propagator& prop, uint32_t cid, CheckMode mode);

// QRAT(+) property of clause cid on literal l: every outer resolvent over
// the resolution neighborhood has QAT, each with its own abstraction index.
// Fails with the lowest-id failing neighbor as witness.
CheckResult check_qrat(const Pcnf& f, Propagator& prop, uint32_t cid, Lit l,
                       CheckMode mode);

// QBCE: every outer resolvent on existential l is a syntactic tautology.
CheckResult qbce_blocked(const Pcnf& f, uint32_t cid, Lit l);

// BLE: every outer resolvent on universal l is a syntactic tautology.
CheckResult ble_blocked(const Pcnf& f, uint32_t cid, Lit l);

} // namespace qratpp
