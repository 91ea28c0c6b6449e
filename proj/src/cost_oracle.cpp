#include "exactgauss/cost_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace exactgauss::oracle {

namespace {

constexpr double kSeriesTol = 1e-12;

double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double whole, double tol, int depth) {
    double m = (a + b) / 2;
    double lm = (a + m) / 2, rm = (m + b) / 2;
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15 * tol)
        return left + right + (left + right - whole) / 15;
    return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    double fa = f(a), fb = f(b), fm = f((a + b) / 2);
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

double expected_deviates_exp(double x) { return std::exp(x); }

double alg3_cost(std::uint64_t k, double x) {
    double kk = static_cast<double>(k);
    double tau = std::exp(x * (2 * kk + x) / (2 * kk + 2));
    return ((4 * kk + x + 3) * tau - 2 * kk - 3) / (2 * kk + x);
}

double alg3_cost_k0(double x) {
    return ((x + 2) * std::exp(x * x / 2) - 2) / (2 * x);
}

double alg6_cost(double x, double y) {
    return (std::exp(x * y) * (1 + y) - 1) / y;
}

double restart_prob_alg3(std::uint64_t k, double x, std::uint64_t n) {
    double m = 2.0 * static_cast<double>(k) + 2.0;
    double ratio = (x + 2.0 * static_cast<double>(k)) / m;
    double prob = 1.0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        prob *= ratio * x / static_cast<double>(i);
    }
    return prob;
}

double restart_pmf_alg3(std::uint64_t k, double x, std::uint64_t n) {
    return restart_prob_alg3(k, x, n) - restart_prob_alg3(k, x, n + 1);
}

double t_k_karney(std::uint64_t k, double x) {
    double kk = static_cast<double>(k);
    double q = std::exp(-x * (2 * kk + x) / (2 * kk + 2));
    double sum = 0, qpow = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        sum += static_cast<double>(i) * qpow * (1 - q);
        qpow *= q;
    }
    return sum + (kk + 1) * qpow;
}

double t_k_improved(std::uint64_t k, double x) {
    if (k == 0) return 0.0;
    double q = std::exp(-x);
    double sum = 0, qpow = 1;
    for (std::uint64_t i = 1; i + 1 <= k; ++i) {
        sum += static_cast<double>(i) * qpow * (1 - q);
        qpow *= q;
    }
    return sum + static_cast<double>(k) * qpow;
}

namespace {

// Series pieces shared by the two discrete Gaussian cost estimates, with
// p1 = exp(-1/(2 sigma^2)).

double accepted_term(double p1) {
    // sum over k of (1 + k^2) p1^{k^2} p0
    double p0 = 1 - p1;
    double sum = 0;
    for (std::uint64_t k = 0;; ++k) {
        double kk = static_cast<double>(k);
        double term = (1 + kk * kk) * std::pow(p1, kk * kk) * p0;
        sum += term;
        if (k > 1 && term < kSeriesTol) break;
    }
    return sum;
}

double accept_prob_series(double p1) {
    double p0 = 1 - p1;
    double sum = 0;
    for (std::uint64_t k = 0;; ++k) {
        double kk = static_cast<double>(k);
        double term = std::pow(p1, kk * kk) * p0;
        sum += term;
        if (k > 1 && term < kSeriesTol) break;
    }
    return sum;
}

double check_sigma(double sigma) {
    if (!(sigma >= std::sqrt(0.5)))
        throw std::invalid_argument("sigma must be at least sqrt(2)/2");
    return std::exp(-1.0 / (2.0 * sigma * sigma));
}

} // namespace

DplusCost dplus_cost_karney(double sigma) {
    double p1 = check_sigma(sigma);
    double p0 = 1 - p1;
    double rejected = 0;
    for (std::uint64_t k = 2;; ++k) {
        double kk = static_cast<double>(k);
        double outer = std::pow(p1, kk) * p0;
        double inner = 0;
        double qpow = 1;
        for (std::uint64_t j = 1; j <= k * (k - 1); ++j) {
            inner += (kk + 1 + static_cast<double>(j)) * qpow * p0;
            qpow *= p1;
        }
        double term = outer * inner;
        rejected += term;
        if (term < kSeriesTol) break;
    }
    DplusCost cost;
    cost.per_attempt = accepted_term(p1) + rejected;
    cost.accept_prob = accept_prob_series(p1);
    cost.per_sample = cost.per_attempt / cost.accept_prob;
    return cost;
}

DplusCost dplus_cost_improved(double sigma) {
    double p1 = check_sigma(sigma);
    double p0 = 1 - p1;
    double rejected = 0;
    for (std::uint64_t k = 2;; ++k) {
        double kk = static_cast<double>(k);
        double outer = std::pow(p1, (kk - 1) + (kk - 1) * (kk - 2) + 1);
        double inner = 0;
        double qpow = 1;
        for (std::uint64_t j = 1; j <= 2 * (k - 1); ++j) {
            inner += (1 + (kk - 1) * (kk - 1) + static_cast<double>(j)) * qpow * p0;
            qpow *= p1;
        }
        double term = outer * inner;
        rejected += term;
        if (term < kSeriesTol) break;
    }
    DplusCost cost;
    cost.per_attempt = accepted_term(p1) + rejected;
    cost.accept_prob = accept_prob_series(p1);
    cost.per_sample = cost.per_attempt / cost.accept_prob;
    return cost;
}

double dplus_pmf(double sigma, std::uint64_t k, double tol) {
    double q = 1.0 / (2.0 * sigma * sigma);
    double norm = 0;
    for (std::uint64_t j = 0;; ++j) {
        double term = std::exp(-static_cast<double>(j) * static_cast<double>(j) * q);
        norm += term;
        if (term < tol) break;
    }
    return std::exp(-static_cast<double>(k) * static_cast<double>(k) * q) / norm;
}

double step4_cost_karney() {
    double total = dplus_pmf(1.0, 0) *
                   integrate([](double x) { return x == 0 ? 0.5 : alg3_cost_k0(x); }, 0, 1);
    for (std::uint64_t k = 1;; ++k) {
        double weight = dplus_pmf(1.0, k);
        if (weight < kSeriesTol) break;
        total += weight * integrate(
                              [k](double x) {
                                  double cost = x == 0 ? 1.0 : alg3_cost(k, x);
                                  return cost * t_k_karney(k, x);
                              },
                              0, 1);
    }
    return total;
}

double step34_cost_improved() {
    double total = 0;
    for (std::uint64_t k = 1;; ++k) {
        double weight = dplus_pmf(1.0, k);
        if (weight < kSeriesTol) break;
        total += weight * integrate(
                              [k](double x) { return t_k_improved(k, x) * std::exp(x); }, 0, 1);
    }
    for (std::uint64_t k = 0;; ++k) {
        double weight = dplus_pmf(1.0, k);
        if (weight < kSeriesTol) break;
        total += weight * integrate(
                              [k](double x) {
                                  double g = x == 0 ? 1.0
                                                    : ((1 + x) * std::exp(x * x / 2) - 1) / x;
                                  return g * std::exp(-static_cast<double>(k) * x);
                              },
                              0, 1);
    }
    return total;
}

double normal_k_marginal(std::uint64_t k) {
    double kk = static_cast<double>(k);
    double mass = integrate([kk](double x) { return std::exp(-(kk + x) * (kk + x) / 2); }, 0, 1);
    return mass / std::sqrt(std::acos(-1.0) / 2.0);
}

std::vector<OracleValue> reference_constants() {
    double root_e = std::sqrt(std::exp(1.0));
    double rejection = std::sqrt(2.0 / std::acos(-1.0)) / (1.0 - 1.0 / root_e);
    double vn = std::exp(1.0) / (1.0 - std::exp(-1.0));
    double vn_early = root_e / (1.0 - 1.0 / root_e);
    return {
        {"normal.rejection_attempts", rejection, "closed-form", 2.03},
        {"exp.deviates_plain", vn, "closed-form", 4.30},
        {"exp.deviates_early_reject", vn_early, "closed-form", 4.19},
    };
}

std::vector<OracleValue> all_oracle_values() {
    std::vector<OracleValue> values = reference_constants();
    values.push_back({"bern.exp_half.deviates", expected_deviates_exp(0.5), "closed-form",
                      1.648721});
    DplusCost karney = dplus_cost_karney(1.0);
    DplusCost improved = dplus_cost_improved(1.0);
    values.push_back({"dgauss.karney.bern_per_attempt", karney.per_attempt, "series(1e-12)",
                      3.32967});
    values.push_back({"dgauss.accept_prob", karney.accept_prob, "series(1e-12)", 0.689875});
    values.push_back({"dgauss.karney.bern_per_sample", karney.per_sample, "series(1e-12)",
                      4.82649});
    values.push_back({"dgauss.improved.bern_per_attempt", improved.per_attempt,
                      "series(1e-12)", 2.54149});
    values.push_back({"dgauss.improved.bern_per_sample", improved.per_sample, "series(1e-12)",
                      3.68399});
    values.push_back({"normal.karney.step4_deviates", step4_cost_karney(), "quadrature(1e-9)",
                      2.19414});
    values.push_back({"normal.improved.step34_deviates", step34_cost_improved(),
                      "quadrature(1e-9)", 2.01799});
    return values;
}

} // namespace exactgauss::oracle
