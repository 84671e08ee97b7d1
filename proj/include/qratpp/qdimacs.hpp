#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qratpp/pcnf.hpp"

namespace qratpp {

class ParseError : public std::runtime_error {
public:
    ParseError(uint32_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    uint32_t line() const { return line_; }

private:
    uint32_t line_;
};

struct ParseOptions {
    // Strict mode rejects variable ids above the preamble bound; lax mode
    // grows the bound instead, like tolerant solver front ends.
    bool strict = true;
};

struct ParseResult {
    Pcnf formula;
    Pcnf::NormalizeReport diagnostics;
};

// Parses a QDIMACS document: 'c' comment lines, a "p cnf <max-var>
// <num-clauses>" preamble, "e ... 0" / "a ... 0" quantifier lines in prefix
// order, then clauses as 0-terminated integer lists. Whitespace and
// newlines between tokens are free-form; the declared clause count is not
// enforced. The result is normalized (see Pcnf::normalize).
ParseResult parse_qdimacs(std::string_view text, const ParseOptions& options = {});
ParseResult parse_qdimacs(std::istream& in, const ParseOptions& options = {});

// Canonical QDIMACS form: unused variables removed from the prefix, empty
// blocks dropped, adjacent equal quantifiers merged, original numbering
// preserved, clauses in live order with canonically ordered literals. A
// formula with zero live clauses is written as "p cnf 0 0" preceded by a
// "c solved: SAT" comment. Writing is a fixpoint: write(parse(write(f))) ==
// write(f).
std::string write_qdimacs(const Pcnf& f);

} // namespace qratpp
