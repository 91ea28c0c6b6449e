#include "exactgauss/enumeration.hpp"

#include <stdexcept>
#include <vector>

#include "exactgauss/bernoulli.hpp"
#include "exactgauss/deviate_ops.hpp"

namespace exactgauss {

double EnumerationResult::low(int outcome) const {
    auto it = decided.find(outcome);
    return it == decided.end() ? 0.0 : static_cast<double>(it->second) / denom();
}

namespace {

struct Walker {
    const std::function<int(RandomSource&)>& fixture;
    unsigned depth;
    EnumerationResult result;
    std::vector<std::uint8_t> prefix;

    void walk() {
        ScriptedSource src(prefix, 1);
        try {
            int outcome = fixture(src);
            // A decided run consumes its whole prefix: each recursion level
            // adds exactly the bit the parent run was missing.
            if (src.bits_consumed() != prefix.size())
                throw std::logic_error("enumeration: fixture is not deterministic");
            result.decided[outcome] +=
                std::uint64_t{1} << (depth - static_cast<unsigned>(prefix.size()));
        } catch (const BitsExhausted&) {
            if (prefix.size() == depth) {
                result.undecided += 1;
                return;
            }
            prefix.push_back(0);
            walk();
            prefix.back() = 1;
            walk();
            prefix.pop_back();
        }
    }
};

} // namespace

EnumerationResult enumerate_outcomes(const std::function<int(RandomSource&)>& fixture,
                                     unsigned depth) {
    if (depth == 0 || depth > 30)
        throw std::invalid_argument("enumeration depth must lie in 1..30");
    Walker w{fixture, depth, {}, {}};
    w.result.depth = depth;
    w.walk();
    return w.result;
}

EnumerationResult enumerate_bern_exp_half(unsigned depth) {
    return enumerate_outcomes(
        [](RandomSource& src) {
            return bern_exp_neg_rational(Rational(1, 2), src).value ? 1 : 0;
        },
        depth);
}

EnumerationResult enumerate_selector_c4(unsigned depth) {
    return enumerate_outcomes([](RandomSource& src) { return selector_c(4, src).value; },
                              depth);
}

} // namespace exactgauss
