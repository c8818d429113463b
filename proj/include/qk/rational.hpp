#ifndef QK_RATIONAL_HPP
#define QK_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qk {

/// Exact rational with a positive denominator, always gcd-reduced.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    /// "p/q", or "p" when q = 1.
    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Threshold alpha = p/q of the conjecture scheme, 0 < p/q <= 1.
class RationalAlpha {
public:
    RationalAlpha(std::int64_t p, std::int64_t q);

    /// Accepts only "P/Q" with decimal integers; anything else (including "0.5") throws InvalidInput.
    static RationalAlpha parse(std::string_view text);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    Rational value() const { return {p_, q_}; }
    std::string to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

    bool operator==(const RationalAlpha&) const = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

}  // namespace qk

#endif  // QK_RATIONAL_HPP
