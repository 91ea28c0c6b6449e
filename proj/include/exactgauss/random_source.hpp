#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "exactgauss/counters.hpp"
#include "exactgauss/uniform_deviate.hpp"

namespace exactgauss {

// Signalled by scripted sources when the predetermined bit supply runs out.
struct BitsExhausted {};

// Seeded source of raw random bits with full randomness accounting.
//
// The digit size (1, 4, 8 or 16 bits per digit) governs how deviate
// expansions are batched and what the digits_drawn counter means; it does not
// change the exactness of anything built on top. A fixed (seed, digit_size)
// pair reproduces the same bit stream, hence the same samples.
//
// The underlying generator is swappable: subclasses override raw_bits().
class RandomSource {
public:
    RandomSource(std::uint64_t seed, unsigned digit_size)
        : seed_(seed), digit_size_(digit_size), engine_(seed) {
        if (digit_size != 1 && digit_size != 4 && digit_size != 8 && digit_size != 16)
            throw std::invalid_argument("digit size must be 1, 4, 8 or 16");
    }

    virtual ~RandomSource() = default;

    std::uint64_t seed() const { return seed_; }
    unsigned digit_size() const { return digit_size_; }
    const Counters& counters() const { return counters_; }

    // One digit of digit_size bits; accounted as a digit, not standalone bits.
    std::uint32_t draw_digit() {
        ++counters_.digits_drawn;
        counters_.bits_drawn += digit_size_;
        return raw_bits(digit_size_);
    }

    // One standalone bit (sign flips, the C(2) selector).
    int draw_bit() {
        ++counters_.bits_drawn;
        return static_cast<int>(raw_bits(1));
    }

    // A new deviate with no digits generated yet. Counts as exactly one
    // deviate regardless of how many digits it consumes later.
    UniformDeviate fresh_deviate() {
        ++counters_.deviates_created;
        return UniformDeviate(*this);
    }

    // Fair sign from one raw bit; no deviate is consumed.
    int random_sign() { return draw_bit() ? 1 : -1; }

protected:
    // n low-order random bits, 1 <= n <= 16. One generator step per call.
    virtual std::uint32_t raw_bits(unsigned n) {
        return static_cast<std::uint32_t>(engine_()) & ((1u << n) - 1u);
    }

private:
    std::uint64_t seed_;
    unsigned digit_size_;
    Counters counters_;
    std::mt19937_64 engine_;
};

// Replays a fixed bit pattern and throws BitsExhausted beyond it. Used by
// the exhaustive enumeration oracle and by deterministic unit tests.
class ScriptedSource : public RandomSource {
public:
    ScriptedSource(std::vector<std::uint8_t> bits, unsigned digit_size = 1)
        : RandomSource(0, digit_size), script_(std::move(bits)) {}

    std::size_t bits_consumed() const { return pos_; }

protected:
    std::uint32_t raw_bits(unsigned n) override {
        std::uint32_t value = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (pos_ >= script_.size()) throw BitsExhausted{};
            value = (value << 1) | script_[pos_++];
        }
        return value;
    }

private:
    std::vector<std::uint8_t> script_;
    std::size_t pos_ = 0;
};

} // namespace exactgauss
