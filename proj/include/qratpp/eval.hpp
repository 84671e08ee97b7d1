#pragma once

#include "qratpp/pcnf.hpp"

namespace qratpp {

// Brute-force semantic evaluation by recursive expansion in prefix order:
// disjunction over the cofactors of an existential variable, conjunction for
// a universal one. An empty clause set is true, a live empty clause false.
// Guarded to at most 24 prefix variables (throws std::invalid_argument).
bool eval_qbf(const Pcnf& f);

} // namespace qratpp
