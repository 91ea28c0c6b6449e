#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace exactgauss {

class RandomSource;

// A uniform deviate over (0,1), represented as a lazily extended binary
// expansion. Digits are generated in batches of the owner's digit size, but
// the stored bits are individually addressable so that one-bit shifts
// (halving) stay exact. Bits, once generated, never change.
//
// The first 128 bits live inline; deeper expansions spill to the heap, which
// in practice never happens outside adversarial scripts.
class UniformDeviate {
public:
    explicit UniformDeviate(RandomSource& owner) : owner_(&owner) {}

    UniformDeviate(UniformDeviate&&) noexcept = default;
    UniformDeviate& operator=(UniformDeviate&&) noexcept = default;
    UniformDeviate(const UniformDeviate&) = delete;
    UniformDeviate& operator=(const UniformDeviate&) = delete;

    // Bit i of the expansion (i = 0 is the most significant fractional bit),
    // drawing whole digits from the owner as needed.
    int bit(std::uint32_t i) {
        while (i >= nbits_) extend_digit();
        return peek(i);
    }

    // Bit i without extension; i must be below bit_count().
    int peek(std::uint32_t i) const {
        std::uint32_t w = i >> 6;
        std::uint64_t word = w < 2 ? head_[w] : spill_[w - 2];
        return static_cast<int>((word >> (63 - (i & 63))) & 1u);
    }

    std::uint32_t bit_count() const { return nbits_; }
    std::uint32_t digit_count() const;

    RandomSource& owner() const { return *owner_; }

    // Draws digits until at least `bits` bits are present.
    void extend_to(std::uint32_t bits) {
        while (nbits_ < bits) extend_digit();
    }

private:
    void extend_digit();
    void append_bits(std::uint32_t value, unsigned width);

    RandomSource* owner_;
    std::uint32_t nbits_ = 0;
    std::array<std::uint64_t, 2> head_{};
    std::vector<std::uint64_t> spill_;
};

} // namespace exactgauss
