#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>

namespace qratpp {

enum class Quantifier : uint8_t { Existential, Universal };

// A literal is a signed reference to a variable. Variables are identified by
// their positive QDIMACS number; the packed code 2*var (positive) or
// 2*var + 1 (negative) doubles as an index into literal-keyed tables.
class Lit {
public:
    Lit() = default;

    static Lit positive(uint32_t var) { return Lit(var << 1); }
    static Lit negative(uint32_t var) { return Lit((var << 1) | 1u); }

    static Lit from_dimacs(int64_t n) {
        return n < 0 ? negative(static_cast<uint32_t>(-n))
                     : positive(static_cast<uint32_t>(n));
    }

    static Lit from_index(uint32_t index) { return Lit(index); }

    uint32_t var() const { return code_ >> 1; }
    bool negative() const { return (code_ & 1u) != 0; }
    uint32_t index() const { return code_; }

    int32_t to_dimacs() const {
        auto v = static_cast<int32_t>(var());
        return negative() ? -v : v;
    }

    Lit operator~() const { return Lit(code_ ^ 1u); }

    friend auto operator<=>(const Lit&, const Lit&) = default;

private:
    explicit Lit(uint32_t code) : code_(code) {}

    uint32_t code_ = 0;
};

} // namespace qratpp
