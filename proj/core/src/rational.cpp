#include "salem/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace salem {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    if (!all_digits(body)) {
        throw std::invalid_argument("malformed fraction '" + std::string(whole) + "'");
    }
    Integer v(std::string(body), 10);
    return negative ? Integer(-v) : v;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    // mpz has no portable int64 constructor; go through the decimal string.
    value_ = mpq_class(mpz_class(std::to_string(value), 10));
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(normalize(mpz_class(std::to_string(numerator), 10),
                         mpz_class(std::to_string(denominator), 10))) {}

Rational Rational::normalize(const Integer& numerator, const Integer& denominator) {
    if (sgn(denominator) == 0) {
        throw std::invalid_argument("zero denominator");
    }
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return normalize(parse_integer(text, text), Integer(1));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    }
    return normalize(num, Integer(std::string(den_text), 10));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::size_t Rational::hash() const {
    const auto h1 = mpz_get_ui(value_.get_num_mpz_t());
    const auto h2 = mpz_get_ui(value_.get_den_mpz_t());
    return std::hash<unsigned long>{}(h1) ^ (std::hash<unsigned long>{}(h2) * 0x9e3779b97f4a7c15ULL) ^
           static_cast<std::size_t>(mpz_sizeinbase(value_.get_den_mpz_t(), 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::string to_decimal(const Rational& r, unsigned places) {
    const Integer num = r.numerator();
    const Integer den = r.denominator();
    Integer mag = abs(num);

    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    Integer scaled = mag * scale;
    Integer quotient;
    Integer remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());

    // Half-to-even on the first dropped position.
    const int twice = cmp(Integer(remainder * 2), den);
    if (twice > 0 || (twice == 0 && mpz_odd_p(quotient.get_mpz_t()) != 0)) {
        ++quotient;
    }

    std::string digits = quotient.get_str();
    if (digits.size() <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    std::string out;
    if (num < 0 && quotient != 0) {
        out.push_back('-');
    }
    out.append(digits, 0, digits.size() - places);
    if (places > 0) {
        out.push_back('.');
        out.append(digits, digits.size() - places, places);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace salem
