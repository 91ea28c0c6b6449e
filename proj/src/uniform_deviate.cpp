#include "exactgauss/uniform_deviate.hpp"

#include "exactgauss/random_source.hpp"

namespace exactgauss {

std::uint32_t UniformDeviate::digit_count() const {
    return nbits_ / owner_->digit_size();
}

void UniformDeviate::extend_digit() {
    unsigned width = owner_->digit_size();
    append_bits(owner_->draw_digit(), width);
}

void UniformDeviate::append_bits(std::uint32_t value, unsigned width) {
    std::uint32_t w = nbits_ >> 6;
    int shift = 64 - static_cast<int>(nbits_ & 63) - static_cast<int>(width);
    std::uint64_t v = value;

    auto word = [this](std::uint32_t idx) -> std::uint64_t& {
        if (idx < 2) return head_[idx];
        while (spill_.size() <= idx - 2) spill_.push_back(0);
        return spill_[idx - 2];
    };

    if (shift >= 0) {
        word(w) |= v << shift;
    } else {
        word(w) |= v >> -shift;
        word(w + 1) |= v << (64 + shift);
    }
    nbits_ += width;
}

} // namespace exactgauss
