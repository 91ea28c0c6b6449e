#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactgauss {

// Exact non-negative fraction, always stored in lowest terms.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;

    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        std::uint64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    // True when the value lies strictly inside (0, 1).
    bool proper() const { return num > 0 && num < den; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // Parses "NUM/DEN" or a bare integer "NUM".
    static Rational parse(const std::string& text);

    friend bool operator==(const Rational&, const Rational&) = default;
};

// Lazily generated binary expansion of num/den, one bit of long division per
// step. The remainder is carried so no big-number growth occurs; requires
// den < 2^63. A terminated expansion continues with zeros, which is exactly
// the behaviour digit-by-digit comparison needs.
class RationalExpansion {
public:
    explicit RationalExpansion(const Rational& q) : rem_(q.num), den_(q.den) {
        if (den_ >= (std::uint64_t{1} << 63))
            throw std::invalid_argument("rational expansion: denominator too large");
        if (q.num > q.den)
            throw std::invalid_argument("rational expansion: value above one");
    }

    int bit(std::uint32_t i) {
        while (i >= bits_.size()) step();
        return bits_[i];
    }

private:
    void step() {
        rem_ <<= 1;
        if (rem_ >= den_) {
            rem_ -= den_;
            bits_.push_back(1);
        } else {
            bits_.push_back(0);
        }
    }

    std::uint64_t rem_;
    std::uint64_t den_;
    std::vector<std::uint8_t> bits_;
};

} // namespace exactgauss
