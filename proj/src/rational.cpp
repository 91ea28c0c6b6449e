#include "exactgauss/rational.hpp"

namespace exactgauss {

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(std::stoull(text), 1);
        }
        std::uint64_t n = std::stoull(text.substr(0, slash));
        std::uint64_t d = std::stoull(text.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("cannot parse rational: " + text);
    }
}

} // namespace exactgauss
