#include "doctest.h"

#include "qratpp/eval.hpp"
#include "qratpp/generator.hpp"
#include "qratpp/qdimacs.hpp"
#include "test_util.hpp"

using namespace qratpp;
using qratpp::testutil::parse;

TEST_CASE("parse: prefix, clauses and levels") {
    Pcnf f = parse("p cnf 2 1\ne 1 0\na 2 0\n1 2 0\n");
    CHECK(f.block_count() == 2);
    CHECK(f.quant_of(1) == Quantifier::Existential);
    CHECK(f.quant_of(2) == Quantifier::Universal);
    CHECK(f.level_of(1) == 1);
    CHECK(f.level_of(2) == 2);
    REQUIRE(f.live_clause_count() == 1);
    CHECK(f.clause(0).lits ==
          std::vector<Lit>{Lit::positive(1), Lit::positive(2)});
}

TEST_CASE("parse: tautological clauses are dropped and counted") {
    ParseResult r = parse_qdimacs("p cnf 1 1\n1 -1 0\n");
    CHECK(r.formula.live_clause_count() == 0);
    CHECK(r.diagnostics.tautologies_dropped == 1);
    // the variable occurred only in the dropped clause but is still bound
    CHECK(r.formula.has_variable(1));
    CHECK(r.formula.quant_of(1) == Quantifier::Existential);
}

TEST_CASE("parse: free variables go to an outermost existential block") {
    ParseResult r = parse_qdimacs("p cnf 2 1\na 2 0\n1 2 0\n");
    const Pcnf& f = r.formula;
    CHECK(r.diagnostics.free_variables_bound == 1);
    REQUIRE(f.block_count() == 2);
    CHECK(f.blocks()[0].quant == Quantifier::Existential);
    CHECK(f.blocks()[0].vars == std::vector<uint32_t>{1});
    CHECK(f.blocks()[1].quant == Quantifier::Universal);

    // merges into an existing outermost existential block
    Pcnf g = parse("p cnf 3 1\ne 1 0\n1 2 3 0\n");
    REQUIRE(g.block_count() == 1);
    CHECK(g.blocks()[0].vars == std::vector<uint32_t>{1, 2, 3});
}

TEST_CASE("parse: duplicate literals are merged") {
    ParseResult r = parse_qdimacs("p cnf 2 1\ne 1 2 0\n1 1 2 0\n");
    CHECK(r.diagnostics.duplicate_literals_merged == 1);
    CHECK(r.formula.clause(0).lits.size() == 2);
}

TEST_CASE("parse: adjacent blocks of one quantifier are merged, empty blocks dropped") {
    Pcnf f = parse("p cnf 4 1\ne 1 0\ne 2 0\na 0\na 3 0\ne 4 0\n1 2 3 4 0\n");
    REQUIRE(f.block_count() == 3);
    CHECK(f.blocks()[0].vars == std::vector<uint32_t>{1, 2});
    CHECK(f.blocks()[1].quant == Quantifier::Universal);
    CHECK(f.level_of(4) == 3);
}

TEST_CASE("parse: empty clause is preserved") {
    Pcnf f = parse("p cnf 1 2\ne 1 0\n0\n1 0\n");
    CHECK(f.live_clause_count() == 2);
    CHECK(f.live_empty_clause_count() == 1);
}

TEST_CASE("parse: comments and odd whitespace") {
    Pcnf f = parse("c header comment\nc another\np cnf 2 2\nc mid comment\n"
                   "e 1\t 2 0\n  1 \r\n -2 0\n2\n1 0\n");
    CHECK(f.live_clause_count() == 2);
    CHECK(f.block_count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse("1 2 0\n"), ParseError);                        // clause before preamble
    CHECK_THROWS_AS(parse("p dnf 1 1\n1 0\n"), ParseError);               // malformed preamble
    CHECK_THROWS_AS(parse("p cnf 1 1\n1\n"), ParseError);                 // unterminated clause
    CHECK_THROWS_AS(parse("p cnf 2 1\ne 1 2\n"), ParseError);             // unterminated block
    CHECK_THROWS_AS(parse("p cnf 1 1\n2 0\n"), ParseError);               // above bound, strict
    CHECK_THROWS_AS(parse("p cnf 1 1\n-0 0\n"), ParseError);              // -0
    CHECK_THROWS_AS(parse("p cnf 2 1\ne 1 0\n1 0\na 2 0\n"), ParseError); // block after matrix
    CHECK_THROWS_AS(parse("p cnf 2 1\ne 1 1 0\n1 0\n"), ParseError);      // redeclared variable
    CHECK_THROWS_AS(parse(""), ParseError);

    try {
        parse("p cnf 1 1\nc fine\n1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4); // EOF after the unterminated clause
    }

    SUBCASE("lax mode grows the bound") {
        ParseOptions lax;
        lax.strict = false;
        ParseResult r = parse_qdimacs("p cnf 1 1\n2 0\n", lax);
        CHECK(r.formula.has_variable(2));
    }
}

TEST_CASE("write: canonical form") {
    CHECK(write_qdimacs(parse("p cnf 1 1\ne 1 0\n1 0\n")) == "p cnf 1 1\ne 1 0\n1 0\n");
    // zero live clauses: SAT-by-emptiness comment
    CHECK(write_qdimacs(parse("p cnf 0 0\n")) == "c solved: SAT\np cnf 0 0\n");
    // unused prefix variables are dropped on export
    CHECK(write_qdimacs(parse("p cnf 3 1\ne 1 2 3 0\n1 3 0\n")) ==
          "p cnf 3 1\ne 1 3 0\n1 3 0\n");
}

TEST_CASE("write/parse round trips on edge cases") {
    const char* cases[] = {
        "p cnf 2 1\na 2 0\n1 2 0\n",                  // free variable
        "p cnf 2 2\ne 1 2 0\n1 -1 0\n1 2 0\n",        // tautology in input
        "p cnf 2 1\ne 1 2 0\n1 1 2 0\n",              // duplicate literal
        "p cnf 1 2\ne 1 0\n0\n1 0\n",                 // empty clause
        "c x\np cnf 2 1\nc y\ne 1 0\na 2 0\n1 2 0\n", // comments
        "p cnf 2 1\n\n\ne   1 0\na 2 0\n 1\t2  0\n",  // odd whitespace
        "p cnf 0 0\n",                                // empty formula
        "p cnf 3 2\ne 1 0\na 2 0\ne 3 0\n1 2 3 0\n-1 -3 0\n",
    };
    for (const char* t : cases) {
        CAPTURE(t);
        Pcnf once = parse(t);
        std::string w1 = write_qdimacs(once);
        Pcnf twice = parse(w1);
        CHECK(write_qdimacs(twice) == w1);
        CHECK(structurally_equal(twice, parse(w1)));
    }
}

TEST_CASE("round trip on a random corpus") {
    CorpusSpec spec;
    spec.count = 1000;
    spec.seed = 99;
    SplitMix64 rng(spec.seed);
    for (uint32_t k = 0; k < spec.count; ++k) {
        std::string text = random_qdimacs(rng, spec);
        CAPTURE(text);
        Pcnf f = parse(text);
        std::string w1 = write_qdimacs(f);
        Pcnf g = parse(w1);
        REQUIRE(write_qdimacs(g) == w1);
        REQUIRE(eval_qbf(f) == eval_qbf(g));
        // no live clause ever contains a complementary pair
        for (uint32_t cid : f.live_clause_ids())
            REQUIRE(!contains_complementary(f.clause(cid).lits));
    }
}

TEST_CASE("normalization is idempotent") {
    const char* cases[] = {
        "p cnf 3 2\na 2 0\n1 2 0\n-1 3 0\n",
        "p cnf 2 2\ne 1 0\ne 2 0\n1 2 0\n-1 -2 0\n",
    };
    for (const char* t : cases) {
        Pcnf f = parse(t);
        Pcnf g = f;
        g.normalize();
        CHECK(structurally_equal(f, g));
        CHECK(write_qdimacs(f) == write_qdimacs(g));
    }
}

TEST_CASE("compute_stats") {
    // forall x exists y. (x v y)(~x v ~y)
    FormulaStats s = compute_stats(parse(testutil::kForallExistsBlockedPair));
    CHECK(s == FormulaStats{2, 2, 2, 2});

    CHECK(compute_stats(parse("p cnf 0 0\n")) == FormulaStats{0, 0, 0, 0});

    // exists a,b forall u. (a v b)(b v u)
    FormulaStats t = compute_stats(parse(testutil::kModeSeparation));
    CHECK(t == FormulaStats{2, 2, 3, 1});

    SUBCASE("existential plus universal occurrences cover all live literals") {
        CorpusSpec spec;
        spec.count = 200;
        SplitMix64 rng(11);
        for (uint32_t k = 0; k < spec.count; ++k) {
            Pcnf f = parse(random_qdimacs(rng, spec));
            FormulaStats st = compute_stats(f);
            uint64_t total = 0;
            for (uint32_t cid : f.live_clause_ids())
                total += f.clause(cid).lits.size();
            REQUIRE(st.existential_literals + st.universal_literals == total);
        }
    }
}

TEST_CASE("reduction_report rounds half-up, 100 on zero denominators") {
    FormulaStats before{100, 4, 8, 2};
    FormulaStats after{79, 4, 1, 1};
    ReductionReport r = reduction_report(before, after);
    CHECK(r.clauses_pct == 79);
    CHECK(r.qblocks_pct == 100);
    CHECK(r.existential_pct == 13); // 12.5 rounds up
    CHECK(r.universal_pct == 50);

    CHECK(reduction_report(before, before) == ReductionReport{100, 100, 100, 100});
    CHECK(reduction_report(FormulaStats{4, 0, 0, 0}, FormulaStats{3, 0, 0, 0}).clauses_pct ==
          75);
    CHECK(reduction_report(FormulaStats{0, 0, 0, 0}, FormulaStats{0, 0, 0, 0}) ==
          ReductionReport{100, 100, 100, 100});
}
