#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "exactgauss/counters.hpp"
#include "exactgauss/deviate_ops.hpp"
#include "exactgauss/random_source.hpp"
#include "exactgauss/rational.hpp"

namespace exactgauss {

// Result of one exact Bernoulli draw together with the randomness it cost.
// `restarts` is the number of times the generating loop went back for another
// round; `invocations` counts inner factory calls for the composite draws.
struct BernoulliOutcome {
    bool value = false;
    Counters cost;
    std::uint64_t restarts = 0;
    std::uint64_t invocations = 0;
};

// True with probability e^{-x} for a comparand x with value in (0,1]:
// determine the maximal n with x > u_1 > u_2 > ... > u_n and report whether
// n is even. Uses one fresh deviate per comparison, e^x of them on average.
template <class X>
BernoulliOutcome bern_exp_neg(X&& x, RandomSource& src) {
    Counters before = src.counters();
    std::uint64_t n = 0;
    UniformDeviate u = src.fresh_deviate();
    if (less_than(u, x)) {
        n = 1;
        UniformDeviate prev = std::move(u);
        for (;;) {
            UniformDeviate next = src.fresh_deviate();
            if (!less_than(next, prev)) break;
            prev = std::move(next);
            ++n;
        }
    }
    return {n % 2 == 0, src.counters() - before, n, 1};
}

// True with probability exactly e^{-q} for rational 0 < q < 1.
inline BernoulliOutcome bern_exp_neg_rational(const Rational& q, RandomSource& src) {
    if (!q.proper()) throw std::invalid_argument("bern_exp_neg_rational: q must lie in (0,1)");
    RationalExpansion e(q);
    return bern_exp_neg(e, src);
}

// True with probability e^{-x} conditional on the (possibly partially
// extended) deviate x; x may gain digits.
inline BernoulliOutcome bern_exp_neg_deviate(UniformDeviate& x, RandomSource& src) {
    return bern_exp_neg(x, src);
}

// True with probability e^{-kx}: k independent e^{-x} draws, stopping at the
// first false. k = 0 is the empty product, true at zero cost.
template <class X>
BernoulliOutcome bern_exp_neg_kx(std::uint64_t k, X&& x, RandomSource& src) {
    Counters before = src.counters();
    bool value = true;
    std::uint64_t invocations = 0;
    for (std::uint64_t i = 0; i < k && value; ++i) {
        ++invocations;
        value = bern_exp_neg(x, src).value;
    }
    return {value, src.counters() - before, 0, invocations};
}

// True with probability e^{-xy} for x, y in (0,1): maximal n with
// x > u_1 > ... > u_n and v_i < y for each step, reporting the parity of n.
// Expected deviates (e^{xy}(1+y)-1)/y.
template <class X, class Y>
BernoulliOutcome bern_exp_neg_xy(X&& x, Y&& y, RandomSource& src) {
    Counters before = src.counters();
    std::uint64_t n = 0;
    std::optional<UniformDeviate> w;
    for (;;) {
        UniformDeviate u = src.fresh_deviate();
        bool descended = w ? less_than(u, *w) : less_than(u, x);
        if (!descended) break;
        UniformDeviate v = src.fresh_deviate();
        if (!less_than(v, y)) break;
        w = std::move(u);
        ++n;
    }
    return {n % 2 == 0, src.counters() - before, n, 1};
}

// True with probability e^{-x^2/2}, via e^{-xy} with the operands split as
// x/2 and x. The halved value goes in the descent slot: cost is lower with
// the larger operand on the v-comparison side.
inline BernoulliOutcome bern_exp_neg_half_x_sq(UniformDeviate& x, RandomSource& src) {
    return bern_exp_neg_xy(halve(x), x, src);
}

inline BernoulliOutcome bern_exp_neg_half_x_sq(Rational x, RandomSource& src) {
    RationalExpansion half(Rational(x.num, 2 * x.den));
    RationalExpansion full(x);
    return bern_exp_neg_xy(half, full, src);
}

// True with probability exp(-x(2k+x)/(2k+2)).
//
// General round for k >= 1: draw z and require z < y, run the selector
// C(2k+2) (stop on -1, pass on +1), and on 0 require a fresh r < x; then
// y <- z and go again. Parity of the completed rounds decides the value.
// For k = 0 the selector C(2) costs a raw bit instead of a deviate, so the
// bit is drawn first and the z comparison second.
template <class X>
BernoulliOutcome bern_alg3(std::uint64_t k, X&& x, RandomSource& src) {
    Counters before = src.counters();
    std::uint64_t n = 0;
    std::optional<UniformDeviate> y;

    auto z_descends = [&](UniformDeviate& z) {
        return y ? less_than(z, *y) : less_than(z, x);
    };

    if (k == 0) {
        for (;;) {
            if (selector_c(2, src).value < 0) break;
            UniformDeviate z = src.fresh_deviate();
            if (!z_descends(z)) break;
            UniformDeviate r = src.fresh_deviate();
            if (!less_than(r, x)) break;
            y = std::move(z);
            ++n;
        }
    } else {
        unsigned m = static_cast<unsigned>(2 * k + 2);
        for (;;) {
            UniformDeviate z = src.fresh_deviate();
            if (!z_descends(z)) break;
            int f = selector_c(m, src).value;
            if (f < 0) break;
            if (f == 0) {
                UniformDeviate r = src.fresh_deviate();
                if (!less_than(r, x)) break;
            }
            y = std::move(z);
            ++n;
        }
    }
    return {n % 2 == 0, src.counters() - before, n, 1};
}

inline BernoulliOutcome bern_alg3(std::uint64_t k, Rational x, RandomSource& src) {
    RationalExpansion e(x);
    return bern_alg3(k, e, src);
}

// True with probability exp(-x(2k+x)/2): the (k+1)-fold power of the
// bern_alg3 probability, stopping at the first false.
template <class X>
BernoulliOutcome bern_step4_karney(std::uint64_t k, X&& x, RandomSource& src) {
    Counters before = src.counters();
    bool value = true;
    std::uint64_t invocations = 0;
    for (std::uint64_t i = 0; i <= k && value; ++i) {
        ++invocations;
        value = bern_alg3(k, x, src).value;
    }
    return {value, src.counters() - before, 0, invocations};
}

inline BernoulliOutcome bern_step4_karney(std::uint64_t k, Rational x, RandomSource& src) {
    RationalExpansion e(x);
    return bern_step4_karney(k, e, src);
}

// Same target probability through the split exp(-x(2k+x)/2) =
// e^{-kx} e^{-x^2/2}, short-circuiting on the first false.
inline BernoulliOutcome bern_step34_improved(std::uint64_t k, UniformDeviate& x,
                                             RandomSource& src) {
    Counters before = src.counters();
    BernoulliOutcome kx = bern_exp_neg_kx(k, x, src);
    std::uint64_t invocations = kx.invocations;
    bool value = kx.value;
    if (value) {
        ++invocations;
        value = bern_exp_neg_half_x_sq(x, src).value;
    }
    return {value, src.counters() - before, 0, invocations};
}

inline BernoulliOutcome bern_step34_improved(std::uint64_t k, Rational x,
                                             RandomSource& src) {
    Counters before = src.counters();
    RationalExpansion e(x);
    BernoulliOutcome kx = bern_exp_neg_kx(k, e, src);
    std::uint64_t invocations = kx.invocations;
    bool value = kx.value;
    if (value) {
        ++invocations;
        value = bern_exp_neg_half_x_sq(x, src).value;
    }
    return {value, src.counters() - before, 0, invocations};
}

} // namespace exactgauss
