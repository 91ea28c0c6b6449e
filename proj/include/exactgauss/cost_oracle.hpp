#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace exactgauss::oracle {

// Analytic predictions for every expected-cost quantity the samplers are
// tested against. This module is a floating-point test oracle; the sampling
// paths themselves never touch it.

// e^x: expected deviates per exact e^{-x} Bernoulli draw.
double expected_deviates_exp(double x);

struct DplusCost {
    double per_attempt = 0;
    double accept_prob = 0;
    double per_sample = 0;
};

// Expected B_{exp(-1/(2 sigma^2))} draws for the two-step discrete Gaussian
// sampler, per proposal round and per returned sample. sigma >= sqrt(2)/2.
DplusCost dplus_cost_karney(double sigma);

// Same for the interleaved sampler.
DplusCost dplus_cost_improved(double sigma);

// Expected deviates of the selector-based exp(-x(2k+x)/(2k+2)) factory,
// k >= 1: ((4k+x+3) tau_k(x) - 2k - 3) / (2k + x) with
// tau_k(x) = exp(x(2k+x)/(2k+2)).
double alg3_cost(std::uint64_t k, double x);

// k = 0 variant (bit-first round order): ((x+2) tau_0(x) - 2) / (2x).
double alg3_cost_k0(double x);

// Expected deviates of the e^{-xy} factory: (e^{xy}(1+y) - 1)/y.
double alg6_cost(double x, double y);

// Probability that the selector-based factory reaches at least n restarts:
// ((x+2k)/m)^n x^n / n! with m = 2k+2. n = 0 gives 1.
double restart_prob_alg3(std::uint64_t k, double x, std::uint64_t n);

// Probability of exactly n restarts.
double restart_pmf_alg3(std::uint64_t k, double x, std::uint64_t n);

// Expected number of inner-factory rounds of the (k+1)-fold acceptance:
// sum_{i=1..k} i q^{i-1}(1-q) + (k+1) q^k with q = exp(-x(2k+x)/(2k+2));
// equals 1 at k = 0.
double t_k_karney(std::uint64_t k, double x);

// Same for the split path with q = e^{-x}:
// sum_{i=1..k-1} i q^{i-1}(1-q) + k q^{k-1}; equals 0 at k = 0.
double t_k_improved(std::uint64_t k, double x);

// Expected deviates consumed by the final acceptance step of the original
// normal sampler, averaged over k and x. Approximately 2.19414.
double step4_cost_karney();

// Same for the split acceptance of the improved sampler. Approximately
// 2.01799.
double step34_cost_improved();

// P(k) for the discrete Gaussian over non-negative integers, series
// truncated at tol.
double dplus_pmf(double sigma, std::uint64_t k, double tol = 1e-12);

// Probability that an accepted normal sample has integer part k:
// the integral of exp(-(k+x)^2/2) over (0,1), normalized.
double normal_k_marginal(std::uint64_t k);

// Adaptive Simpson quadrature over [a, b]. f must be finite at both ends;
// callers substitute the limit value at removable singularities.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-9);

struct OracleValue {
    std::string name;
    double value = 0;
    std::string method;             // closed-form | series(tol) | quadrature(tol)
    std::optional<double> expected; // published figure the value must reproduce
};

// The free-standing constants: rejection rate of the normal sampler and the
// exponential-sampler deviate costs with and without early rejection.
std::vector<OracleValue> reference_constants();

// Full registry, including every published cost figure.
std::vector<OracleValue> all_oracle_values();

} // namespace exactgauss::oracle
