#include "exactgauss/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exactgauss::stats {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double chi2_quantile_999(unsigned df) {
    // Upper 0.001 critical values, df 1..16.
    static const double table[] = {10.8276, 13.8155, 16.2662, 18.4668, 20.5150, 22.4577,
                                   24.3219, 26.1245, 27.8772, 29.5883, 31.2641, 32.9095,
                                   34.5282, 36.1233, 37.6973, 39.2524};
    if (df == 0 || df > 16) throw std::invalid_argument("chi2 quantile: df out of range");
    return table[df - 1];
}

double ks_critical_999(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("ks critical: n must be positive");
    return 1.9494746 / std::sqrt(static_cast<double>(n));
}

GofResult chi2_gof(const std::vector<std::uint64_t>& observed, const std::vector<double>& probs,
                   std::uint64_t n) {
    if (observed.size() != probs.size() || observed.size() < 2)
        throw std::invalid_argument("chi2_gof: need matching bins");
    double stat = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double expected = probs[i] * static_cast<double>(n);
        double d = static_cast<double>(observed[i]) - expected;
        stat += d * d / expected;
    }
    double threshold = chi2_quantile_999(static_cast<unsigned>(observed.size() - 1));
    return {stat, threshold, stat < threshold};
}

GofResult chi2_two_sample(const std::vector<std::uint64_t>& a,
                          const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("chi2_two_sample: need matching bins");
    double na = 0, nb = 0;
    for (auto v : a) na += static_cast<double>(v);
    for (auto v : b) nb += static_cast<double>(v);
    double stat = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double pooled = (static_cast<double>(a[i]) + static_cast<double>(b[i])) / (na + nb);
        double ea = pooled * na, eb = pooled * nb;
        if (ea == 0) continue;
        double da = static_cast<double>(a[i]) - ea;
        double db = static_cast<double>(b[i]) - eb;
        stat += da * da / ea + db * db / eb;
    }
    double threshold = chi2_quantile_999(static_cast<unsigned>(a.size() - 1));
    return {stat, threshold, stat < threshold};
}

GofResult ks_normal_gof(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("ks: n must be positive");
    std::sort(values.begin(), values.end());
    double n = static_cast<double>(values.size());
    double dn = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double f = normal_cdf(values[i]);
        dn = std::max(dn, std::max((static_cast<double>(i) + 1) / n - f,
                                   f - static_cast<double>(i) / n));
    }
    double critical = ks_critical_999(values.size());
    return {dn, critical, dn < critical};
}

GofResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks: n must be positive");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    double dn = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        dn = std::max(dn, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    double critical = 1.9494746 * std::sqrt((na + nb) / (na * nb));
    return {dn, critical, dn < critical};
}

std::vector<std::uint64_t> dgauss_histogram(DGaussVariant variant, const SigmaParam& p,
                                            std::uint64_t n, std::uint64_t seed,
                                            unsigned digit_size, unsigned top) {
    if (n == 0) throw std::invalid_argument("histogram: n must be positive");
    RandomSource src(seed, digit_size);
    std::vector<std::uint64_t> counts(top + 1, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t k = variant == DGaussVariant::improved
                              ? sample_dplus_improved(p, src).value
                              : sample_dplus_karney(p, src).value;
        counts[std::min<std::uint64_t>(k, top)] += 1;
    }
    return counts;
}

std::vector<double> dgauss_bin_probs(const SigmaParam& p, unsigned top) {
    std::vector<double> probs(top + 1, 0.0);
    double tail = 1.0;
    for (unsigned k = 0; k < top; ++k) {
        probs[k] = pmf_dplus(p, k, 1e-14);
        tail -= probs[k];
    }
    probs[top] = tail;
    return probs;
}

std::vector<double> normal_values(NormalAlgorithm alg, std::uint64_t n, unsigned precision,
                                  std::uint64_t seed, unsigned digit_size) {
    if (n == 0) throw std::invalid_argument("normal_values: n must be positive");
    RandomSource src(seed, digit_size);
    std::vector<double> values;
    values.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        NormalSampleStats s = sample_normal(alg, src);
        values.push_back(finalize(s.sample, precision).to_double());
    }
    return values;
}

GofResult chi2_dgauss(DGaussVariant variant, const SigmaParam& p, std::uint64_t n,
                      std::uint64_t seed, unsigned digit_size) {
    const unsigned top = 6;
    auto counts = dgauss_histogram(variant, p, n, seed, digit_size, top);
    return chi2_gof(counts, dgauss_bin_probs(p, top), n);
}

GofResult ks_normal(NormalAlgorithm alg, std::uint64_t n, unsigned precision,
                    std::uint64_t seed, unsigned digit_size) {
    return ks_normal_gof(normal_values(alg, n, precision, seed, digit_size));
}

GofResult chi2_dgauss_two_sample(const SigmaParam& p, std::uint64_t n, std::uint64_t seed,
                                 unsigned digit_size) {
    const unsigned top = 6;
    auto a = dgauss_histogram(DGaussVariant::karney, p, n, seed, digit_size, top);
    auto b = dgauss_histogram(DGaussVariant::improved, p, n, seed + 1, digit_size, top);
    return chi2_two_sample(a, b);
}

GofResult ks_normal_two_sample(std::uint64_t n, unsigned precision, std::uint64_t seed,
                               unsigned digit_size) {
    auto a = normal_values(NormalAlgorithm::karney, n, precision, seed, digit_size);
    auto b = normal_values(NormalAlgorithm::improved_b, n, precision, seed + 1, digit_size);
    return ks_two_sample(std::move(a), std::move(b));
}

} // namespace exactgauss::stats
