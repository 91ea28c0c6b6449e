#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "exactgauss/random_source.hpp"

namespace exactgauss {

// Exact probability bounds from a complete walk of the binary tree of raw-bit
// outcomes at digit size 1. Masses are dyadic with denominator 2^depth; paths
// still running at the depth limit form the undecided mass, so for every
// outcome  low <= true probability <= low + undecided.
struct EnumerationResult {
    unsigned depth = 0;
    std::map<int, std::uint64_t> decided; // outcome -> mass in units of 2^-depth
    std::uint64_t undecided = 0;          // same units

    double denom() const { return static_cast<double>(std::uint64_t{1} << depth); }
    double low(int outcome) const;
    double high(int outcome) const { return low(outcome) + gap(); }
    double gap() const { return static_cast<double>(undecided) / denom(); }
};

// Runs `fixture` against every bit script up to `depth` bits (depth <= 30),
// exploring only the prefixes the algorithm actually reaches. The fixture
// must be deterministic given the bit stream and is re-run per prefix.
EnumerationResult enumerate_outcomes(const std::function<int(RandomSource&)>& fixture,
                                     unsigned depth);

// Outcomes 0/1 for the exact e^{-1/2} Bernoulli draw.
EnumerationResult enumerate_bern_exp_half(unsigned depth);

// Outcomes -1/0/+1 for the selector C(4).
EnumerationResult enumerate_selector_c4(unsigned depth);

} // namespace exactgauss
