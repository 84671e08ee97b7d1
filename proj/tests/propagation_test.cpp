#include "doctest.h"

#include <algorithm>

#include "qratpp/generator.hpp"
#include "qratpp/propagation.hpp"
#include "test_util.hpp"

using namespace qratpp;
using qratpp::testutil::parse;

namespace {

std::vector<Lit> sorted(std::vector<Lit> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Runs both propagators, requires agreement, returns the engine's outcome.
PropagationOutcome both(const Pcnf& f, QbcpEngine& engine, std::vector<Lit> assumptions,
                        AbstractionIndex i, PropagationMode mode,
                        std::optional<uint32_t> excluded = {}) {
    PropagationOutcome fast = engine.propagate(assumptions, i, mode, excluded);
    PropagationOutcome slow = propagate_naive(f, assumptions, i, mode, excluded);
    REQUIRE(fast.conflict == slow.conflict);
    if (!fast.conflict)
        REQUIRE(sorted(fast.closure) == sorted(slow.closure));
    REQUIRE(engine.watchers_restored());
    return fast;
}

} // namespace

TEST_CASE("is_existential_under") {
    // forall at level 1, universal at 2, existential at 3
    Pcnf f = parse("p cnf 3 0\na 1 0\ne 2 0\na 3 0\n");
    CHECK(is_existential_under(f, 1, 1));  // universal but level <= i
    CHECK(!is_existential_under(f, 3, 1)); // universal, deeper than i
    CHECK(is_existential_under(f, 2, 1));  // existential regardless of i
    CHECK(is_existential_under(f, 3, 3));  // full abstraction
}

TEST_CASE("universal_reducible") {
    SUBCASE("no deeper existential") {
        Pcnf f = parse("p cnf 2 1\ne 1 0\na 2 0\n1 2 0\n");
        const auto& lits = f.clause(0).lits;
        CHECK(universal_reducible(f, Lit::positive(2), lits, 0));
    }
    SUBCASE("blocked by a deeper existential") {
        Pcnf f = parse("p cnf 2 1\na 1 0\ne 2 0\n1 2 0\n");
        const auto& lits = f.clause(0).lits;
        CHECK(!universal_reducible(f, Lit::positive(1), lits, 0));
        CHECK(!universal_reducible(f, Lit::positive(2), lits, 0)); // existential literal
    }
    SUBCASE("computed on the unfalsified remainder") {
        // exists a,b forall u with clause (b v u): once b is falsified the
        // remainder is just (u), which reduces.
        Pcnf f = parse("p cnf 3 1\ne 1 2 0\na 3 0\n2 3 0\n");
        std::vector<Lit> remainder{Lit::positive(3)};
        CHECK(universal_reducible(f, Lit::positive(3), remainder, 1));
    }
}

TEST_CASE("propagate: universal reduction derives the conflict") {
    // exists a,b forall u. (b v u); assuming ~a,~b leaves (u), which reduces
    // to the empty clause under i = 1.
    Pcnf f = parse("p cnf 3 1\ne 1 2 0\na 3 0\n2 3 0\n");
    QbcpEngine engine(f);
    std::vector<Lit> assumptions{Lit::negative(1), Lit::negative(2)};

    PropagationOutcome ur = both(f, engine, assumptions, 1,
                                 PropagationMode::WithUniversalReduction);
    CHECK(ur.conflict);

    // plain unit propagation on the full abstraction instead assigns u
    PropagationOutcome up = both(f, engine, assumptions, f.block_count(),
                                 PropagationMode::PlainUnitPropagation);
    CHECK(!up.conflict);
    CHECK(sorted(up.closure) ==
          sorted({Lit::negative(1), Lit::negative(2), Lit::positive(3)}));
}

TEST_CASE("propagate: no clauses leaves the assumptions as closure") {
    Pcnf f = parse("p cnf 1 0\ne 1 0\n");
    QbcpEngine engine(f);
    for (AbstractionIndex i = 0; i <= f.block_count(); ++i) {
        PropagationOutcome out = both(f, engine, {Lit::negative(1)}, i,
                                      PropagationMode::WithUniversalReduction);
        CHECK(!out.conflict);
        CHECK(out.closure == std::vector<Lit>{Lit::negative(1)});
    }
}

TEST_CASE("propagate: a live empty clause is an immediate conflict") {
    Pcnf f = parse("p cnf 1 2\ne 1 0\n0\n1 0\n");
    QbcpEngine engine(f);
    CHECK(both(f, engine, {}, 0, PropagationMode::WithUniversalReduction).conflict);
}

TEST_CASE("propagate: all-universal clause conflicts without assumptions") {
    Pcnf f = parse("p cnf 2 1\na 1 2 0\n1 2 0\n");
    QbcpEngine engine(f);
    CHECK(both(f, engine, {}, 0, PropagationMode::WithUniversalReduction).conflict);
}

TEST_CASE("propagate: excluded clause is invisible") {
    Pcnf f = parse("p cnf 1 1\ne 1 0\n1 0\n");
    QbcpEngine engine(f);
    PropagationOutcome with = both(f, engine, {}, 1,
                                   PropagationMode::WithUniversalReduction);
    CHECK(with.closure == std::vector<Lit>{Lit::positive(1)});
    PropagationOutcome without = both(f, engine, {}, 1,
                                      PropagationMode::WithUniversalReduction, 0u);
    CHECK(without.closure.empty());
}

TEST_CASE("propagate: complementary assumptions resolve to conflict") {
    Pcnf f = parse("p cnf 1 0\ne 1 0\n");
    QbcpEngine engine(f);
    std::vector<Lit> assumptions{Lit::positive(1), Lit::negative(1)};
    CHECK(engine.propagate(assumptions, 1, PropagationMode::WithUniversalReduction, {})
              .conflict);
    CHECK(propagate_naive(f, assumptions, 1, PropagationMode::WithUniversalReduction)
              .conflict);
}

TEST_CASE("propagate: unit chain through watched clauses") {
    Pcnf f = parse("p cnf 3 2\ne 1 2 3 0\n-1 2 0\n-2 3 0\n");
    QbcpEngine engine(f);
    PropagationOutcome out = both(f, engine, {Lit::positive(1)}, 1,
                                  PropagationMode::WithUniversalReduction);
    CHECK(sorted(out.closure) ==
          sorted({Lit::positive(1), Lit::positive(2), Lit::positive(3)}));
}

TEST_CASE("propagate: outer universal literal blocks unit detection") {
    // forall u exists e. (u v e): e is not forced, u is outer to it.
    Pcnf f = parse("p cnf 2 1\na 1 0\ne 2 0\n1 2 0\n");
    QbcpEngine engine(f);
    PropagationOutcome out = both(f, engine, {}, 0,
                                  PropagationMode::WithUniversalReduction);
    CHECK(!out.conflict);
    CHECK(out.closure.empty());

    // under i = 1 the universal is abstracted away and assignable, still no
    // unit: (u v e) has two existential-under-i literals.
    out = both(f, engine, {}, 1, PropagationMode::WithUniversalReduction);
    CHECK(out.closure.empty());

    // falsifying e leaves (u), which reduces: conflict at i = 0
    CHECK(both(f, engine, {Lit::negative(2)}, 0,
               PropagationMode::WithUniversalReduction)
              .conflict);
}

TEST_CASE("propagate never assigns variables universal under the index") {
    CorpusSpec spec;
    spec.count = 300;
    SplitMix64 rng(42);
    for (uint32_t k = 0; k < spec.count; ++k) {
        Pcnf f = parse(random_qdimacs(rng, spec));
        QbcpEngine engine(f);
        for (AbstractionIndex i = 0; i <= f.block_count(); ++i) {
            PropagationOutcome out =
                engine.propagate({}, i, PropagationMode::WithUniversalReduction, {});
            if (!out.conflict)
                for (Lit l : out.closure)
                    REQUIRE(is_existential_under(f, l.var(), i));
            REQUIRE(engine.watchers_restored());
        }
    }
}

TEST_CASE("mode monotonicity: plain-UP conflict implies QBCP conflict") {
    CorpusSpec spec;
    spec.count = 500;
    SplitMix64 rng(7);
    uint64_t plain_conflicts = 0;
    for (uint32_t k = 0; k < spec.count; ++k) {
        Pcnf f = parse(random_qdimacs(rng, spec));
        QbcpEngine engine(f);
        std::vector<Lit> assumptions;
        for (uint32_t v = 1; v <= f.max_var_id(); ++v)
            if (f.has_variable(v) && rng.below(3) == 0)
                assumptions.push_back(rng.below(2) == 0 ? Lit::positive(v)
                                                        : Lit::negative(v));
        AbstractionIndex n = f.block_count();
        bool plain = engine.propagate(assumptions, n,
                                      PropagationMode::PlainUnitPropagation, {})
                         .conflict;
        bool with_ur = engine.propagate(assumptions, n,
                                        PropagationMode::WithUniversalReduction, {})
                           .conflict;
        if (plain) {
            ++plain_conflicts;
            REQUIRE(with_ur);
        }
    }
    CHECK(plain_conflicts > 0);
}

TEST_CASE("plain unit propagation requires the full abstraction") {
    Pcnf f = parse("p cnf 2 1\ne 1 0\na 2 0\n1 2 0\n");
    QbcpEngine engine(f);
    CHECK_THROWS_AS(engine.propagate({}, 0, PropagationMode::PlainUnitPropagation, {}),
                    std::logic_error);
    CHECK_THROWS_AS(propagate_naive(f, {}, 1, PropagationMode::PlainUnitPropagation),
                    std::logic_error);
}

TEST_CASE("propagate is deterministic for a fixed clause ordering") {
    Pcnf f = parse("p cnf 4 3\ne 1 2 0\na 3 0\ne 4 0\n1 2 0\n-2 3 4 0\n-1 4 0\n");
    QbcpEngine engine(f);
    std::vector<Lit> assumptions{Lit::negative(4)};
    PropagationOutcome first =
        engine.propagate(assumptions, 2, PropagationMode::WithUniversalReduction, {});
    for (int r = 0; r < 5; ++r) {
        PropagationOutcome again =
            engine.propagate(assumptions, 2, PropagationMode::WithUniversalReduction, {});
        REQUIRE(again.conflict == first.conflict);
        REQUIRE(again.closure == first.closure); // identical trail, not just set
    }
}

TEST_CASE("watched engine equals naive propagator on random episodes") {
    CorpusSpec spec;
    spec.count = 400;
    SplitMix64 rng(20240);
    for (uint32_t k = 0; k < spec.count; ++k) {
        Pcnf f = parse(random_qdimacs(rng, spec));
        QbcpEngine engine(f);
        for (int episode = 0; episode < 8; ++episode) {
            PropagationMode mode = episode % 2 == 0
                                       ? PropagationMode::WithUniversalReduction
                                       : PropagationMode::PlainUnitPropagation;
            AbstractionIndex i =
                mode == PropagationMode::PlainUnitPropagation
                    ? f.block_count()
                    : static_cast<AbstractionIndex>(rng.below(f.block_count() + 1));
            std::vector<Lit> assumptions;
            for (uint32_t v = 1; v <= f.max_var_id(); ++v)
                if (f.has_variable(v) && is_existential_under(f, v, i) && rng.below(2) == 0)
                    assumptions.push_back(rng.below(2) == 0 ? Lit::positive(v)
                                                            : Lit::negative(v));
            std::optional<uint32_t> excluded;
            if (f.clause_count() > 0 && rng.below(3) == 0)
                excluded = static_cast<uint32_t>(rng.below(f.clause_count()));
            both(f, engine, assumptions, i, mode, excluded);
        }
    }
}
