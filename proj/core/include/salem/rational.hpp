#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers.
 *
 * Every quantity in the library (probabilities, thresholds, Salem values,
 * cylinder endpoints and measures) is a Rational. Values are always stored
 * in lowest terms with a positive denominator, so structural equality is
 * value equality. The integers are arbitrary precision (GMP).
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace salem {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Reduced fraction numerator/denominator. Throws std::invalid_argument
    /// when the denominator is zero.
    static Rational normalize(const Integer& numerator, const Integer& denominator);

    /// Parses `a/b` or a bare integer `a` (optional leading '-').
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// `a/b`, or `a` when the denominator is 1.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  // throws std::domain_error on zero

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    [[nodiscard]] std::size_t hash() const;

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

Rational abs(const Rational& r);

/// Fixed-point rendering with exactly `places` fractional digits, rounded
/// half-to-even. No fractional part (and no '.') when places == 0.
std::string to_decimal(const Rational& r, unsigned places);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace salem

template <>
struct std::hash<salem::Rational> {
    std::size_t operator()(const salem::Rational& r) const noexcept { return r.hash(); }
};
