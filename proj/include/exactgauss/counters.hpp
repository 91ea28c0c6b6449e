#pragma once

#include <cstdint>

namespace exactgauss {

// Randomness accounting. A uniform deviate counts once no matter how many
// digits it later consumes; digits and standalone bits are tracked separately
// so that bits_drawn == digits_drawn * digit_size + standalone bits.
struct Counters {
    std::uint64_t deviates_created = 0;
    std::uint64_t digits_drawn = 0;
    std::uint64_t bits_drawn = 0;
};

inline Counters operator-(const Counters& a, const Counters& b) {
    return {a.deviates_created - b.deviates_created,
            a.digits_drawn - b.digits_drawn,
            a.bits_drawn - b.bits_drawn};
}

inline Counters operator+(const Counters& a, const Counters& b) {
    return {a.deviates_created + b.deviates_created,
            a.digits_drawn + b.digits_drawn,
            a.bits_drawn + b.bits_drawn};
}

} // namespace exactgauss
