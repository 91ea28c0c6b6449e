#pragma once

#include <cstdint>
#include <vector>

#include "exactgauss/discrete_gaussian.hpp"
#include "exactgauss/normal.hpp"
#include "exactgauss/random_source.hpp"

namespace exactgauss::stats {

// Standard normal CDF for the KS oracle (validator only; the samplers never
// use floating point).
double normal_cdf(double x);

// Upper 0.001 critical value of the chi-square distribution.
double chi2_quantile_999(unsigned df);

// Asymptotic one-sample KS critical value at significance alpha = 0.001.
double ks_critical_999(std::uint64_t n);

struct GofResult {
    double statistic = 0;
    double threshold = 0;
    bool pass = false;
};

// Pearson statistic of observed counts against fully specified bin
// probabilities; df = bins - 1.
GofResult chi2_gof(const std::vector<std::uint64_t>& observed,
                   const std::vector<double>& probs, std::uint64_t n);

// Homogeneity test of two observed tables over the same bins.
GofResult chi2_two_sample(const std::vector<std::uint64_t>& a,
                          const std::vector<std::uint64_t>& b);

// One-sample KS of sorted values against the standard normal CDF.
GofResult ks_normal_gof(std::vector<double> values);

// Two-sample KS at alpha = 0.001.
GofResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// Bins k = 0..top-1 plus a tail bin.
std::vector<std::uint64_t> dgauss_histogram(DGaussVariant variant, const SigmaParam& p,
                                            std::uint64_t n, std::uint64_t seed,
                                            unsigned digit_size, unsigned top);
std::vector<double> dgauss_bin_probs(const SigmaParam& p, unsigned top);

// n finalized samples at the given precision.
std::vector<double> normal_values(NormalAlgorithm alg, std::uint64_t n, unsigned precision,
                                  std::uint64_t seed, unsigned digit_size);

// Goodness-of-fit runners used by the CLI and the acceptance suite.
GofResult chi2_dgauss(DGaussVariant variant, const SigmaParam& p, std::uint64_t n,
                      std::uint64_t seed, unsigned digit_size = 8);
GofResult ks_normal(NormalAlgorithm alg, std::uint64_t n, unsigned precision,
                    std::uint64_t seed, unsigned digit_size = 8);
GofResult chi2_dgauss_two_sample(const SigmaParam& p, std::uint64_t n, std::uint64_t seed,
                                 unsigned digit_size = 8);
GofResult ks_normal_two_sample(std::uint64_t n, unsigned precision, std::uint64_t seed,
                               unsigned digit_size = 8);

} // namespace exactgauss::stats
