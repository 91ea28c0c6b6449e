#pragma once

#include <cstdint>

#include "exactgauss/random_source.hpp"
#include "exactgauss/rational.hpp"

namespace exactgauss {

// Width parameter for the discrete Gaussian over the non-negative integers,
// with q = 1/(2 sigma^2) derived exactly. Requires rational sigma > sqrt(2)/2,
// validated as 2 num^2 > den^2 in integers; equivalently q < 1.
struct SigmaParam {
    Rational sigma;
    Rational q;

    static SigmaParam make(const Rational& sigma);
};

// One returned sample together with the count of exact Bernoulli draws from
// B_{exp(-q)} it consumed and the number of proposal rounds it took.
struct DiscreteSampleStats {
    std::uint64_t value = 0;
    std::uint64_t bern_draws = 0;
    std::uint64_t attempts = 0;
};

// Two-step scheme: select k geometrically (draw until the first false), then
// accept with k(k-1) further draws that must all come up true; any false
// restarts from scratch.
DiscreteSampleStats sample_dplus_karney(const SigmaParam& p, RandomSource& src);

// Interleaved scheme: acceptance draws are woven into the selection so a
// rejected k is abandoned before its final selection draw is spent. Same
// output distribution, fewer draws.
DiscreteSampleStats sample_dplus_improved(const SigmaParam& p, RandomSource& src);

// Floating-point test oracle: exp(-k^2/(2 sigma^2)) / sum_j exp(-j^2/(2 sigma^2)),
// the series truncated once a term drops below tol.
double pmf_dplus(const SigmaParam& p, std::uint64_t k, double tol);

} // namespace exactgauss
