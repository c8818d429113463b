#include "qk/rational.hpp"

#include <charconv>
#include <numeric>

#include "qk/error.hpp"

namespace qk {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::operator+(const Rational& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

Rational Rational::operator-(const Rational& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

Rational Rational::operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }

Rational Rational::operator/(const Rational& o) const { return {num_ * o.den_, den_ * o.num_}; }

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    const __int128 lhs = static_cast<__int128>(num_) * o.den_;
    const __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalAlpha::RationalAlpha(std::int64_t p, std::int64_t q) {
    if (q < 1 || p < 1 || p > q) {
        throw InvalidInput("alpha must satisfy 0 < p/q <= 1, got " + std::to_string(p) + "/" +
                           std::to_string(q));
    }
    std::int64_t g = std::gcd(p, q);
    p_ = p / g;
    q_ = q / g;
}

RationalAlpha RationalAlpha::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw InvalidInput("alpha must be an exact fraction P/Q, got '" + std::string(text) + "'");
    }
    auto parse_int = [&](std::string_view part) {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw InvalidInput("alpha must be an exact fraction P/Q, got '" + std::string(text) + "'");
        }
        return value;
    };
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

}  // namespace qk
