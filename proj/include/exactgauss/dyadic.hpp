#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exactgauss/uniform_deviate.hpp"

namespace exactgauss {

// Exact dyadic rendering of a lazy sample: sign * (int_part + 0.frac_bits),
// the fraction truncated to a fixed number of bits. Increasing the precision
// later yields a consistent prefix because deviate digits never change.
struct Dyadic {
    int sign = 1;
    std::uint64_t int_part = 0;
    std::vector<std::uint8_t> frac_bits; // most significant bit first

    unsigned precision() const { return static_cast<unsigned>(frac_bits.size()); }

    double to_double() const;

    // Exact decimal expansion, minimal digits (a dyadic fraction of p bits
    // has at most p decimal digits).
    std::string to_decimal_string() const;

    // Fraction bits packed into hex nibbles, most significant first; the
    // final nibble is zero-padded on the right.
    std::string frac_hex() const;
};

// Extends the deviate to at least `precision` bits and truncates.
Dyadic finalize(UniformDeviate& u, unsigned precision);

} // namespace exactgauss
