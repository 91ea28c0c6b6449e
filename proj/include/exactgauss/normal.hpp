#pragma once

#include <cstdint>

#include "exactgauss/dyadic.hpp"
#include "exactgauss/random_source.hpp"
#include "exactgauss/uniform_deviate.hpp"

namespace exactgauss {

// An exact standard-normal sample: value sign * (k + frac) with the
// fractional part still lazy. frac keeps whatever digits the acceptance
// steps already forced; finalize() extends it on demand.
struct ExactSample {
    int sign = 1;
    std::uint64_t k = 0;
    UniformDeviate frac;
};

// Per-sample accounting. attempts counts arrivals at the proposal step;
// attempts_step4 counts the attempts that reached the final acceptance test,
// and deviates_step4 the deviates that test consumed (the deviate that
// materializes x itself is excluded). step1_bern_draws counts the exact
// Bernoulli draws spent selecting k.
struct NormalSampleStats {
    ExactSample sample;
    std::uint64_t attempts = 0;
    std::uint64_t attempts_step4 = 0;
    std::uint64_t deviates_step4 = 0;
    std::uint64_t step1_bern_draws = 0;
    std::uint64_t deviates_total = 0;
    std::uint64_t bits_total = 0;
};

enum class DGaussVariant { karney, improved };

enum class NormalAlgorithm { karney, improved_a, improved_b };

// Original scheme: geometric k selection, k(k-1)-draw acceptance, then the
// acceptance of x via the (k+1)-fold selector-based factory.
NormalSampleStats sample_normal_karney(RandomSource& src);

// Improved scheme: k drawn from the discrete Gaussian (by either variant),
// then acceptance of x through the split e^{-kx} e^{-x^2/2} factories. Any
// false restarts with a fresh k.
NormalSampleStats sample_normal_improved(RandomSource& src, DGaussVariant variant);

NormalSampleStats sample_normal(NormalAlgorithm alg, RandomSource& src);

// Truncates sign * (k + frac) to the requested precision.
Dyadic finalize(ExactSample& s, unsigned precision);

} // namespace exactgauss
