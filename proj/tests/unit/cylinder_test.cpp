#include <doctest.h>

#include "salem/cylinder.hpp"
#include "salem/random.hpp"

using namespace salem;

namespace {

const ProbabilityVector kHalfThirdSixth = ProbabilityVector::parse("1/2,1/3,1/6");
const ProbabilityVector kQuarterHalfQuarter = ProbabilityVector::parse("1/4,1/2,1/4");

DigitWord word(std::string_view text, std::uint32_t q = 3) { return parse_word(text, Alphabet(q)); }

}  // namespace

TEST_CASE("cylinder_of") {
    const auto c = cylinder_of(kQuarterHalfQuarter, word("11122"));
    CHECK(c.measure() == Rational(1, 128));
    CHECK(c.sup() - c.inf() == c.measure());
    // Endpoints are the values of base(0) and base(2).
    CHECK(c.inf() == eval_periodic(kQuarterHalfQuarter, parse_number("11122(0)", Alphabet(3))));
    CHECK(c.sup() == eval_periodic(kQuarterHalfQuarter, parse_number("11122(2)", Alphabet(3))));

    const auto whole = cylinder_of(kHalfThirdSixth, word(""));
    CHECK(whole.inf() == Rational(0));
    CHECK(whole.sup() == Rational(1));
    CHECK(whole.measure() == Rational(1));
    CHECK(cylinder_of(kHalfThirdSixth, word("121200")).measure() == Rational(1, 1296));
    CHECK_THROWS_AS(cylinder_of(kHalfThirdSixth, word("01", 2)), std::invalid_argument);
}

TEST_CASE("children split the parent left to right") {
    const auto kids = children(cylinder_of(kHalfThirdSixth, word("")));
    REQUIRE(kids.size() == 3);
    CHECK(kids[0].inf() == Rational(0));
    CHECK(kids[0].sup() == Rational(1, 2));
    CHECK(kids[1].inf() == Rational(1, 2));
    CHECK(kids[1].sup() == Rational(5, 6));
    CHECK(kids[2].inf() == Rational(5, 6));
    CHECK(kids[2].sup() == Rational(1));

    const auto thirds = children(cylinder_of(ProbabilityVector::uniform(3), word("")));
    for (Digit d = 0; d < 3; ++d) {
        CHECK(thirds[d].inf() == Rational(d, 3));
        CHECK(thirds[d].measure() == Rational(1, 3));
    }
}

TEST_CASE("abutting endpoints are twin values") {
    // sup of ...0 equals inf of ...1: the values of c0(2) and c1(0).
    const auto c = cylinder_of(kHalfThirdSixth, word("21"));
    const auto kids = children(c);
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
        CHECK(kids[i + 1].inf() - kids[i].sup() == Rational(0));
    }
}

TEST_CASE("f_image") {
    const auto c = cylinder_of(kQuarterHalfQuarter, word("11122"));
    const auto img = f_image(c, theta_standard());
    CHECK(format_digits(img.base()) == "22211");
    CHECK(img.measure() == Rational(1, 256));
    CHECK(img.measure() / c.measure() == Rational(1, 2));
    const auto same = f_image(c, DigitPermutation::identity(3));
    CHECK(same.base() == c.base());
    CHECK(same.inf() == c.inf());
    CHECK(same.sup() == c.sup());
}

TEST_CASE("alternating_measure") {
    const auto flipped = flip_alternating(AlternatingScheme::odd_positions, word("121200"));
    CHECK(format_digits(flipped) == "121220");
    CHECK(alternating_measure(kHalfThirdSixth, flipped) == Rational(1, 3888));
    CHECK(alternating_measure(kHalfThirdSixth, word("")) == Rational(1));
    CHECK(alternating_measure(ProbabilityVector::uniform(3), word("2010")) == Rational(1, 81));
    // Metric theories differ.
    CHECK(cylinder_of(kHalfThirdSixth, word("121200")).measure() != alternating_measure(kHalfThirdSixth, flipped));
}

TEST_CASE("all_words enumerates lexicographically") {
    const auto words = all_words(Alphabet(2), 3);
    REQUIRE(words.size() == 8);
    CHECK(format_digits(words.front()) == "000");
    CHECK(format_digits(words[5]) == "101");
    CHECK(format_digits(words.back()) == "111");
    CHECK(all_words(Alphabet(3), 0).size() == 1);
}

TEST_CASE("rank-m cylinders tile [0, 1]") {
    random::Engine rng(61);
    const auto P = random::probability_vector(rng, 3);
    for (std::size_t m = 1; m <= 8; ++m) {
        Rational cursor;
        Rational total;
        for (const auto& w : all_words(P.alphabet(), m)) {
            const auto c = cylinder_of(P, w);
            CHECK(c.inf() == cursor);
            cursor = c.sup();
            total += c.measure();
        }
        CHECK(cursor == Rational(1));
        CHECK(total == Rational(1));
    }
}

TEST_CASE("nesting and tiling on random cylinders") {
    random::Engine rng(67);
    for (int i = 0; i < 500; ++i) {
        const auto P = random::probability_vector_in(rng, 2, 5);
        const auto c = cylinder_of(P, random::word(rng, P.alphabet(), 0, 12));
        CHECK(c.sup() - c.inf() == weight(P, c.base()));
        const auto kids = children(c);
        CHECK(kids.front().inf() == c.inf());
        CHECK(kids.back().sup() == c.sup());
        Rational total;
        for (std::size_t k = 0; k < kids.size(); ++k) {
            CHECK(c.contains(kids[k]));
            CHECK((kids[k].inf() > c.inf() || kids[k].sup() < c.sup()));
            if (k + 1 < kids.size()) {
                CHECK(kids[k].sup() == kids[k + 1].inf());
            }
            total += kids[k].measure();
        }
        CHECK(total == c.measure());
    }
}

TEST_CASE("theta changes some cylinder measure at rank <= 5") {
    const auto theta = theta_standard();
    std::size_t changed = 0;
    for (std::size_t m = 0; m <= 5; ++m) {
        for (const auto& w : all_words(Alphabet(3), m)) {
            const auto c = cylinder_of(kQuarterHalfQuarter, w);
            if (f_image(c, theta).measure() != c.measure()) {
                ++changed;
            }
        }
    }
    CHECK(changed > 0);
}
