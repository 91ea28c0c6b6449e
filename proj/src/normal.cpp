#include "exactgauss/normal.hpp"

#include "exactgauss/bernoulli.hpp"
#include "exactgauss/discrete_gaussian.hpp"

namespace exactgauss {

NormalSampleStats sample_normal_karney(RandomSource& src) {
    Counters start = src.counters();
    RationalExpansion half(Rational(1, 2));
    std::uint64_t attempts = 0, attempts4 = 0, dev4 = 0, draws1 = 0;
    for (;;) {
        ++attempts;
        std::uint64_t k = 0;
        ++draws1;
        while (bern_exp_neg(half, src).value) {
            ++k;
            ++draws1;
        }
        bool k_ok = true;
        for (std::uint64_t j = 1; j <= k * (k - 1); ++j) {
            ++draws1;
            if (!bern_exp_neg(half, src).value) {
                k_ok = false;
                break;
            }
        }
        if (!k_ok) continue;

        UniformDeviate x = src.fresh_deviate();
        ++attempts4;
        Counters before4 = src.counters();
        bool x_ok = bern_step4_karney(k, x, src).value;
        dev4 += (src.counters() - before4).deviates_created;
        if (!x_ok) continue;

        int sign = src.random_sign();
        Counters total = src.counters() - start;
        return {{sign, k, std::move(x)}, attempts,    attempts4,
                dev4,                    draws1,      total.deviates_created,
                total.bits_drawn};
    }
}

NormalSampleStats sample_normal_improved(RandomSource& src, DGaussVariant variant) {
    Counters start = src.counters();
    SigmaParam unit = SigmaParam::make(Rational(1, 1));
    std::uint64_t attempts = 0, attempts34 = 0, dev34 = 0, draws1 = 0;
    for (;;) {
        ++attempts;
        DiscreteSampleStats ks = variant == DGaussVariant::improved
                                     ? sample_dplus_improved(unit, src)
                                     : sample_dplus_karney(unit, src);
        draws1 += ks.bern_draws;

        UniformDeviate x = src.fresh_deviate();
        ++attempts34;
        Counters before34 = src.counters();
        bool x_ok = bern_step34_improved(ks.value, x, src).value;
        dev34 += (src.counters() - before34).deviates_created;
        if (!x_ok) continue;

        int sign = src.random_sign();
        Counters total = src.counters() - start;
        return {{sign, ks.value, std::move(x)}, attempts,  attempts34,
                dev34,                          draws1,    total.deviates_created,
                total.bits_drawn};
    }
}

NormalSampleStats sample_normal(NormalAlgorithm alg, RandomSource& src) {
    switch (alg) {
        case NormalAlgorithm::karney: return sample_normal_karney(src);
        case NormalAlgorithm::improved_a:
            return sample_normal_improved(src, DGaussVariant::karney);
        default: return sample_normal_improved(src, DGaussVariant::improved);
    }
}

Dyadic finalize(ExactSample& s, unsigned precision) {
    Dyadic d = finalize(s.frac, precision);
    d.sign = s.sign;
    d.int_part = s.k;
    return d;
}

} // namespace exactgauss
