#pragma once

#include <cstdint>
#include <stdexcept>

#include "exactgauss/random_source.hpp"
#include "exactgauss/rational.hpp"
#include "exactgauss/uniform_deviate.hpp"

namespace exactgauss {

// View of a deviate scaled by 1/2: a one-bit right shift of the expansion.
// Comparisons against it are exact and consume no randomness of their own.
struct HalvedDeviate {
    UniformDeviate* base;
};

inline HalvedDeviate halve(UniformDeviate& u) { return {&u}; }

// Comparand access: anything with a lazily extendable binary expansion.
inline int comparand_bit(UniformDeviate& c, std::uint32_t i) { return c.bit(i); }
inline int comparand_bit(HalvedDeviate c, std::uint32_t i) {
    return i == 0 ? 0 : c.base->bit(i - 1);
}
inline int comparand_bit(RationalExpansion& c, std::uint32_t i) { return c.bit(i); }

// Exact comparison, scanning the expansions until the first differing bit.
// Ties extend lazily and are never cut short: exact equality has probability
// zero, so the scan terminates almost surely. Deviates are only extended as
// far as the decision needs, and the decision is invariant under further
// extension.
template <class A, class B>
bool less_than(A&& a, B&& b) {
    for (std::uint32_t i = 0;; ++i) {
        int x = comparand_bit(a, i);
        int y = comparand_bit(b, i);
        if (x != y) return x < y;
    }
}

inline bool less_than_rational(UniformDeviate& u, const Rational& q) {
    RationalExpansion e(q);
    return less_than(u, e);
}

inline bool less_than_deviate(UniformDeviate& u, UniformDeviate& v) {
    return less_than(u, v);
}

// Three-way selector: -1, 0, +1 with probabilities 1/m, 1/m, 1 - 2/m.
struct SelectorOutcome {
    int value = 0;
};

// Realized as one B_{2/m} deviate comparison followed by one fair bit. For
// m == 2 the comparison is certain, so only the bit is drawn and the outcome
// is -1 or 0; no deviate is consumed in that case.
inline SelectorOutcome selector_c(unsigned m, RandomSource& src) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("selector C(m) requires even m >= 2");
    if (m > 2) {
        UniformDeviate u = src.fresh_deviate();
        if (!less_than_rational(u, Rational(2, m))) return {+1};
    }
    return {src.draw_bit() ? 0 : -1};
}

} // namespace exactgauss
