#pragma once

#include <cmath>
#include <cstdint>

#include "doctest.h"

namespace testutil {

inline double binomial_4sigma(double p, std::uint64_t n) {
    return 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// Empirical frequency against an exact probability, 4-sigma binomial band.
inline void check_freq(std::uint64_t hits, std::uint64_t n, double p) {
    double observed = static_cast<double>(hits) / static_cast<double>(n);
    CHECK(std::fabs(observed - p) <= binomial_4sigma(p, n));
}

inline void check_near(double value, double target, double tol) {
    CHECK(std::fabs(value - target) <= tol);
}

} // namespace testutil
