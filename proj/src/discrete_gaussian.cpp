#include "exactgauss/discrete_gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "exactgauss/bernoulli.hpp"

namespace exactgauss {

SigmaParam SigmaParam::make(const Rational& sigma) {
    if (sigma.num == 0) throw std::invalid_argument("sigma must be positive");
    if (sigma.num >= (std::uint64_t{1} << 31) || sigma.den >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("sigma numerator/denominator out of range");
    // sigma > sqrt(2)/2  <=>  2 num^2 > den^2, checked exactly.
    if (2 * sigma.num * sigma.num <= sigma.den * sigma.den)
        throw std::invalid_argument("sigma must exceed sqrt(2)/2");
    return {sigma, Rational(sigma.den * sigma.den, 2 * sigma.num * sigma.num)};
}

DiscreteSampleStats sample_dplus_karney(const SigmaParam& p, RandomSource& src) {
    RationalExpansion q(p.q);
    DiscreteSampleStats stats;
    for (;;) {
        ++stats.attempts;
        std::uint64_t k = 0;
        ++stats.bern_draws;
        while (bern_exp_neg(q, src).value) {
            ++k;
            ++stats.bern_draws;
        }
        bool accepted = true;
        for (std::uint64_t j = 1; j <= k * (k - 1); ++j) {
            ++stats.bern_draws;
            if (!bern_exp_neg(q, src).value) {
                accepted = false;
                break;
            }
        }
        if (accepted) {
            stats.value = k;
            return stats;
        }
    }
}

DiscreteSampleStats sample_dplus_improved(const SigmaParam& p, RandomSource& src) {
    RationalExpansion q(p.q);
    DiscreteSampleStats stats;
    auto draw = [&] {
        ++stats.bern_draws;
        return bern_exp_neg(q, src).value;
    };
restart:
    ++stats.attempts;
    if (!draw()) {
        stats.value = 0;
        return stats;
    }
    if (!draw()) {
        stats.value = 1;
        return stats;
    }
    for (std::uint64_t k = 2;; ++k) {
        for (std::uint64_t t = 2 * (k - 1); t > 0; --t) {
            if (!draw()) goto restart;
        }
        if (!draw()) {
            stats.value = k;
            return stats;
        }
    }
}

double pmf_dplus(const SigmaParam& p, std::uint64_t k, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("pmf_dplus: tol must be positive");
    double q = p.q.to_double();
    double norm = 0.0;
    for (std::uint64_t j = 0;; ++j) {
        double term = std::exp(-static_cast<double>(j) * static_cast<double>(j) * q);
        norm += term;
        if (term < tol) break;
    }
    return std::exp(-static_cast<double>(k) * static_cast<double>(k) * q) / norm;
}

} // namespace exactgauss
