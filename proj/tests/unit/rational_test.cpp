#include <doctest.h>

#include "oracles.hpp"
#include "salem/random.hpp"
#include "salem/rational.hpp"

using salem::Integer;
using salem::Rational;
using salem::to_decimal;

TEST_CASE("normalize reduces and fixes the sign") {
    CHECK(Rational::normalize(Integer(-2), Integer(-4)).to_string() == "1/2");
    CHECK(Rational::normalize(Integer(0), Integer(5)).to_string() == "0");
    CHECK(Rational::normalize(Integer(0), Integer(5)).denominator() == 1);
    CHECK(Rational::normalize(Integer(6), Integer(4)).to_string() == "3/2");
    CHECK(Rational::normalize(Integer(3), Integer(-9)).to_string() == "-1/3");
    CHECK_THROWS_AS(Rational::normalize(Integer(1), Integer(0)), std::invalid_argument);
}

TEST_CASE("parse accepts a/b and bare integers") {
    CHECK(Rational::parse("1/6") == Rational(1, 6));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("123456789012345678901234567890/3").numerator().get_str() ==
          "41152263004115226300411522630");
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "+1", "1/-2", " 1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("division by zero is a domain error") { CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error); }

TEST_CASE("to_decimal renders fixed places with half-to-even") {
    CHECK(to_decimal(Rational(1, 2), 6) == "0.500000");
    CHECK(to_decimal(Rational(35, 36), 6) == "0.972222");
    CHECK(to_decimal(Rational(1, 8), 2) == "0.12");
    CHECK(to_decimal(Rational(3, 8), 2) == "0.38");
    CHECK(to_decimal(Rational(5, 2), 0) == "2");
    CHECK(to_decimal(Rational(7, 2), 0) == "4");
    CHECK(to_decimal(Rational(-1, 8), 2) == "-0.12");
    CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");
    CHECK(to_decimal(Rational(999, 1000), 2) == "1.00");
}

TEST_CASE("to_decimal agrees with long division on random values") {
    salem::random::Engine rng(7);
    for (int i = 0; i < 2000; ++i) {
        const auto num = static_cast<std::int64_t>(salem::random::uniform_int(rng, 0, 20000)) - 10000;
        const auto den = static_cast<std::int64_t>(salem::random::uniform_int(rng, 1, 4000));
        const auto places = static_cast<unsigned>(salem::random::uniform_int(rng, 0, 8));
        const Rational r(num, den);
        CAPTURE(r.to_string());
        CAPTURE(places);
        const auto text = to_decimal(r, places);
        CHECK(text == salem::oracle::long_division_decimal(r, places));

        // Parsed back, the rendering is within half a unit in the last place.
        std::string digits = text;
        const auto dot = digits.find('.');
        if (dot != std::string::npos) {
            digits.erase(dot, 1);
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
        const auto back = Rational::normalize(Integer(digits, 10), scale);
        CHECK(salem::abs(back - r) * Rational(2) * Rational::normalize(scale, Integer(1)) <= Rational(1));
    }
}

TEST_CASE("field operations are exact") {
    salem::random::Engine rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto x = Rational(static_cast<std::int64_t>(salem::random::uniform_int(rng, 0, 1'000'000)) - 500'000,
                                static_cast<std::int64_t>(salem::random::uniform_int(rng, 1, 1'000'000)));
        auto y = Rational(static_cast<std::int64_t>(salem::random::uniform_int(rng, 1, 1'000'000)),
                          static_cast<std::int64_t>(salem::random::uniform_int(rng, 1, 1'000'000)));
        if (salem::random::uniform_int(rng, 0, 1) == 1) {
            y = -y;
        }
        CHECK((x + y) - y == x);
        CHECK((x * y) / y == x);
        // normalize preserves value
        CHECK(Rational::normalize(x.numerator() * 3, x.denominator() * 3) == x);
    }
}

TEST_CASE("ordering and hashing") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(std::hash<Rational>{}(Rational(2, 4)) == std::hash<Rational>{}(Rational(1, 2)));
}
