#pragma once

#include <string>

#include "qratpp/qdimacs.hpp"

namespace qratpp::testutil {

inline Pcnf parse(const std::string& text) {
    return parse_qdimacs(text).formula;
}

// Golden instances used across the suites.

// forall x exists y. (x v y)(~x v ~y) -- both clauses are blocked, true.
inline const char* kForallExistsBlockedPair = "p cnf 2 2\n"
                                              "a 1 0\n"
                                              "e 2 0\n"
                                              "1 2 0\n"
                                              "-1 -2 0\n";

// exists e forall u. (e v u)(~u v e) -- universal-literal elimination
// strips u and ~u, the rest collapses, true.
inline const char* kExistsForallSat = "p cnf 2 2\n"
                                      "e 1 0\n"
                                      "a 2 0\n"
                                      "1 2 0\n"
                                      "-2 1 0\n";

// exists z forall x. (x v z)(~x v ~z) -- simplifies exactly to
// exists z. (z)(~z), false both before and after.
inline const char* kExistsForallCore = "p cnf 2 2\n"
                                       "e 1 0\n"
                                       "a 2 0\n"
                                       "2 1 0\n"
                                       "-2 -1 0\n";

inline const char* kExistsForallCoreSimplified = "p cnf 1 2\n"
                                                 "e 1 0\n"
                                                 "1 0\n"
                                                 "-1 0\n";

// exists a,b forall u. (a v b)(b v u) -- clause-level QAT of (a v b) holds
// with universal reduction on the partial abstraction and fails with plain
// propagation on the full abstraction.
inline const char* kModeSeparation = "p cnf 3 2\n"
                                     "e 1 2 0\n"
                                     "a 3 0\n"
                                     "1 2 0\n"
                                     "2 3 0\n";

// forall x. (x) -- blocked literal elimination empties the clause, false.
inline const char* kUnitUniversal = "p cnf 1 1\n"
                                    "a 1 0\n"
                                    "1 0\n";

// exists z. (z)(~z) -- no rule applies, false.
inline const char* kContradictoryUnits = "p cnf 1 2\n"
                                         "e 1 0\n"
                                         "1 0\n"
                                         "-1 0\n";

} // namespace qratpp::testutil
