#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exactgauss/deviate_ops.hpp"
#include "exactgauss/dyadic.hpp"
#include "exactgauss/random_source.hpp"
#include "exactgauss/rational.hpp"

#include "test_util.hpp"

using namespace exactgauss;
using testutil::check_freq;
using testutil::check_near;

TEST_CASE("source construction and determinism") {
    RandomSource fresh(42, 1);
    CHECK(fresh.counters().bits_drawn == 0);
    CHECK(fresh.counters().deviates_created == 0);
    CHECK(fresh.counters().digits_drawn == 0);

    CHECK_THROWS_AS(RandomSource(42, 3), std::invalid_argument);
    CHECK_THROWS_AS(RandomSource(42, 0), std::invalid_argument);
    CHECK_THROWS_AS(RandomSource(42, 32), std::invalid_argument);

    // Identical (seed, digit_size) reproduces the bit stream.
    RandomSource a(42, 8), b(42, 8);
    for (int i = 0; i < 1000; ++i) CHECK(a.draw_digit() == b.draw_digit());
    RandomSource c(42, 8), d(42, 8);
    for (int i = 0; i < 1000; ++i) CHECK(c.draw_bit() == d.draw_bit());
}

TEST_CASE("fresh deviates are lazy and counted once") {
    RandomSource src(7, 1);
    UniformDeviate u = src.fresh_deviate();
    CHECK(src.counters().deviates_created == 1);
    CHECK(src.counters().digits_drawn == 0);
    CHECK(u.bit_count() == 0);

    // A true decision against 1/2 at digit size 1 is made by the very first
    // bit (0 against the leading 1 of the expansion).
    for (int trial = 0; trial < 200;) {
        RandomSource s(static_cast<std::uint64_t>(trial) + 1000, 1);
        UniformDeviate v = s.fresh_deviate();
        Counters before = s.counters();
        bool less = less_than_rational(v, Rational(1, 2));
        std::uint64_t digits = (s.counters() - before).digits_drawn;
        CHECK(digits >= 1);
        if (less) {
            CHECK(digits == 1);
            ++trial;
        } else {
            CHECK(digits >= 2);
            ++trial;
        }
    }
}

TEST_CASE("mean digits per comparison against 1/2 at digit size 1") {
    const std::uint64_t n = 1000000;
    RandomSource src(11, 1);
    Counters before = src.counters();
    for (std::uint64_t i = 0; i < n; ++i) {
        UniformDeviate u = src.fresh_deviate();
        less_than_rational(u, Rational(1, 2));
    }
    double mean = static_cast<double>((src.counters() - before).digits_drawn) /
                  static_cast<double>(n);
    check_near(mean, 2.0, 0.01);
}

TEST_CASE("rational comparison probabilities and digit schedule") {
    const std::uint64_t n = 1000000;
    RandomSource src(5, 4);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        UniformDeviate u = src.fresh_deviate();
        if (less_than_rational(u, Rational(1, 2))) ++hits;
    }
    check_freq(hits, n, 0.5);

    // Forced digits: u starting 1 is undecided against 3/4 = 0.11..., the
    // second bit settles it.
    ScriptedSource forced({1, 0}, 1);
    UniformDeviate u = forced.fresh_deviate();
    RationalExpansion q(Rational(3, 4));
    CHECK(less_than(u, q));
    CHECK(u.bit_count() == 2);

    ScriptedSource forced2({1, 1, 0}, 1);
    UniformDeviate v = forced2.fresh_deviate();
    RationalExpansion q2(Rational(3, 4));
    CHECK_FALSE(less_than(v, q2)); // 0.110... >= 0.11 decides at the first zero
}

TEST_CASE("deviate-deviate comparison is fair and chains correctly") {
    const std::uint64_t n = 1000000;
    RandomSource src(13, 8);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        UniformDeviate u = src.fresh_deviate();
        UniformDeviate v = src.fresh_deviate();
        if (less_than_deviate(u, v)) ++hits;
    }
    check_freq(hits, n, 0.5);
}

TEST_CASE("descending runs bounded by x have mass x^n/n!") {
    const std::uint64_t n = 400000;
    RandomSource src(17, 1);
    std::uint64_t run1 = 0, run2 = 0, run3 = 0;
    RationalExpansion x(Rational(1, 2));
    for (std::uint64_t i = 0; i < n; ++i) {
        UniformDeviate u1 = src.fresh_deviate();
        if (!less_than(u1, x)) continue;
        ++run1;
        UniformDeviate u2 = src.fresh_deviate();
        if (!less_than(u2, u1)) continue;
        ++run2;
        UniformDeviate u3 = src.fresh_deviate();
        if (less_than(u3, u2)) ++run3;
    }
    check_freq(run1, n, 0.5);
    check_freq(run2, n, 0.125);
    check_freq(run3, n, 0.5 * 0.5 * 0.5 / 6.0);
}

TEST_CASE("halving is an exact one-bit shift") {
    // halve(u) < 1/2 always, with no digits drawn.
    RandomSource src(23, 4);
    for (int i = 0; i < 50; ++i) {
        UniformDeviate u = src.fresh_deviate();
        Counters before = src.counters();
        RationalExpansion q(Rational(1, 2));
        CHECK(less_than(halve(u), q));
        CHECK((src.counters() - before).digits_drawn == 0);
    }

    // u > u/2 always.
    for (int i = 0; i < 200; ++i) {
        UniformDeviate u = src.fresh_deviate();
        CHECK_FALSE(less_than(u, halve(u)));
    }

    // Leading bits 101 shift to 0101: strictly between 1/4 and 3/8.
    ScriptedSource forced({1, 0, 1}, 1);
    UniformDeviate u = forced.fresh_deviate();
    HalvedDeviate h = halve(u);
    CHECK(comparand_bit(h, 0) == 0);
    CHECK(comparand_bit(h, 1) == 1);
    CHECK(comparand_bit(h, 2) == 0);
    CHECK(comparand_bit(h, 3) == 1);
    RationalExpansion lo(Rational(1, 4));
    RationalExpansion hi(Rational(3, 8));
    CHECK_FALSE(less_than(h, lo));
    CHECK(less_than(h, hi));

    // P(fresh v < u/2) = 1/4.
    const std::uint64_t n = 1000000;
    RandomSource mc(29, 8);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        UniformDeviate base = mc.fresh_deviate();
        UniformDeviate v = mc.fresh_deviate();
        if (less_than(v, halve(base))) ++hits;
    }
    check_freq(hits, n, 0.25);
}

TEST_CASE("selector outcomes and accounting") {
    RandomSource bad(1, 1);
    CHECK_THROWS_AS(selector_c(3, bad), std::invalid_argument);
    CHECK_THROWS_AS(selector_c(0, bad), std::invalid_argument);
    CHECK_THROWS_AS(selector_c(7, bad), std::invalid_argument);

    const std::uint64_t n = 1000000;
    {
        RandomSource src(31, 8);
        std::uint64_t neg = 0, zero = 0;
        Counters before = src.counters();
        for (std::uint64_t i = 0; i < n; ++i) {
            int v = selector_c(2, src).value;
            CHECK(v != 1);
            if (v < 0) ++neg;
            if (v == 0) ++zero;
        }
        Counters used = src.counters() - before;
        CHECK(used.deviates_created == 0); // C(2) costs a bare bit
        CHECK(used.bits_drawn == n);
        check_freq(neg, n, 0.5);
        check_freq(zero, n, 0.5);
    }
    {
        RandomSource src(37, 8);
        std::uint64_t neg = 0, zero = 0, pos = 0;
        Counters before = src.counters();
        for (std::uint64_t i = 0; i < n; ++i) {
            int v = selector_c(4, src).value;
            (v < 0 ? neg : v == 0 ? zero : pos) += 1;
        }
        CHECK((src.counters() - before).deviates_created == n); // one deviate each
        check_freq(neg, n, 0.25);
        check_freq(zero, n, 0.25);
        check_freq(pos, n, 0.5);
    }
    {
        RandomSource src(41, 8);
        std::uint64_t neg = 0, zero = 0, pos = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            int v = selector_c(6, src).value;
            (v < 0 ? neg : v == 0 ? zero : pos) += 1;
        }
        check_freq(neg, n, 1.0 / 6.0);
        check_freq(zero, n, 1.0 / 6.0);
        check_freq(pos, n, 2.0 / 3.0);
    }
}

TEST_CASE("random sign costs one bit and no deviate") {
    const std::uint64_t n = 1000000;
    RandomSource src(43, 8);
    Counters before = src.counters();
    std::uint64_t plus = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (src.random_sign() > 0) ++plus;
    }
    Counters used = src.counters() - before;
    CHECK(used.deviates_created == 0);
    CHECK(used.bits_drawn == n);
    CHECK(used.digits_drawn == 0);
    check_freq(plus, n, 0.5);

    RandomSource a(47, 8), b(47, 8);
    for (int i = 0; i < 100; ++i) CHECK(a.random_sign() == b.random_sign());
}

TEST_CASE("bit accounting invariant") {
    RandomSource src(53, 4);
    std::uint64_t standalone = 0;
    for (int i = 0; i < 1000; ++i) {
        UniformDeviate u = src.fresh_deviate();
        less_than_rational(u, Rational(1, 3));
        src.random_sign();
        ++standalone;
        if (i % 3 == 0) {
            selector_c(2, src);
            ++standalone;
        }
    }
    const Counters& c = src.counters();
    CHECK(c.bits_drawn == c.digits_drawn * 4 + standalone);
}

TEST_CASE("finalize renders exact dyadic prefixes") {
    {
        ScriptedSource forced({1, 0, 1}, 1);
        UniformDeviate u = forced.fresh_deviate();
        Dyadic d = finalize(u, 3);
        CHECK(d.to_double() == 0.625);
        CHECK(d.to_decimal_string() == "0.625");
        CHECK(d.frac_hex() == "a");
    }
    {
        // Extending the precision refines within the earlier bracket.
        RandomSource src(59, 8);
        for (int i = 0; i < 100; ++i) {
            UniformDeviate u = src.fresh_deviate();
            double d8 = finalize(u, 8).to_double();
            double d16 = finalize(u, 16).to_double();
            CHECK(d16 >= d8);
            CHECK(d16 < d8 + 1.0 / 256.0);
        }
    }
    {
        // sign -1, k = 2, all-zero fraction bits: exactly -2 at precision 4.
        ScriptedSource forced({0, 0, 0, 0}, 1);
        UniformDeviate u = forced.fresh_deviate();
        Dyadic d = finalize(u, 4);
        d.sign = -1;
        d.int_part = 2;
        CHECK(d.to_double() == -2.0);
        CHECK(d.to_double() > -3.0);
        CHECK(d.to_decimal_string() == "-2.0");
    }
    {
        RandomSource src(61, 8);
        UniformDeviate u = src.fresh_deviate();
        CHECK_THROWS_AS(finalize(u, 0), std::invalid_argument);
    }
}

TEST_CASE("comparison decisions are stable under extension") {
    RandomSource src(67, 1);
    for (int i = 0; i < 500; ++i) {
        UniformDeviate u = src.fresh_deviate();
        RationalExpansion q(Rational(3, 8));
        bool first = less_than(u, q);
        u.extend_to(u.bit_count() + 16);
        RationalExpansion q2(Rational(3, 8));
        CHECK(less_than(u, q2) == first);
    }
}

TEST_CASE("rational parsing and validation") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("4/8") == Rational(1, 2));
    CHECK(Rational::parse("2") == Rational(2, 1));
    CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(2, 4).num == 1);
    CHECK(Rational(2, 4).den == 2);
    CHECK(Rational(1, 2).proper());
    CHECK_FALSE(Rational(1, 1).proper());
}
