#include "exactgauss/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactgauss {

double Dyadic::to_double() const {
    double f = 0.0;
    for (std::size_t i = frac_bits.size(); i-- > 0;) {
        f = (f + frac_bits[i]) / 2.0;
    }
    return sign * (static_cast<double>(int_part) + f);
}

std::string Dyadic::to_decimal_string() const {
    // The fraction is an integer F < 2^p scaled by 2^-p. Repeatedly multiply
    // by 10 and peel off the overflow past bit p; the expansion terminates in
    // at most p digits. Limbs are little-endian base 2^32 sized for p+4 bits
    // so the multiply never overflows the array.
    unsigned p = precision();
    std::vector<std::uint32_t> limbs((p + 4 + 31) / 32, 0);
    for (unsigned i = 0; i < p; ++i) {
        if (!frac_bits[i]) continue;
        unsigned pos = p - 1 - i;
        limbs[pos / 32] |= std::uint32_t{1} << (pos % 32);
    }

    auto get_bit = [&](unsigned pos) -> unsigned {
        return (limbs[pos / 32] >> (pos % 32)) & 1u;
    };
    auto clear_bit = [&](unsigned pos) {
        limbs[pos / 32] &= ~(std::uint32_t{1} << (pos % 32));
    };
    auto nonzero = [&] {
        return std::any_of(limbs.begin(), limbs.end(), [](std::uint32_t v) { return v != 0; });
    };

    std::string frac;
    while (nonzero()) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs) {
            std::uint64_t v = std::uint64_t{limb} * 10 + carry;
            limb = static_cast<std::uint32_t>(v);
            carry = v >> 32;
        }
        unsigned digit = 0;
        for (unsigned b = 0; b < 4; ++b) {
            if (get_bit(p + b)) {
                digit |= 1u << b;
                clear_bit(p + b);
            }
        }
        frac += static_cast<char>('0' + digit);
    }
    if (frac.empty()) frac = "0";

    std::string out;
    if (sign < 0) out += '-';
    out += std::to_string(int_part);
    out += '.';
    out += frac;
    return out;
}

std::string Dyadic::frac_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < frac_bits.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < frac_bits.size()) nibble |= frac_bits[i + j];
        }
        out += digits[nibble];
    }
    return out;
}

Dyadic finalize(UniformDeviate& u, unsigned precision) {
    if (precision < 1) throw std::invalid_argument("finalize: precision must be >= 1");
    u.extend_to(precision);
    Dyadic d;
    d.frac_bits.resize(precision);
    for (unsigned i = 0; i < precision; ++i) d.frac_bits[i] = static_cast<std::uint8_t>(u.peek(i));
    return d;
}

} // namespace exactgauss
