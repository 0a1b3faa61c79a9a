#include "salem/check.hpp"

#include <functional>
#include <sstream>

#include "salem/cylinder.hpp"
#include "salem/operators.hpp"
#include "salem/random.hpp"

namespace salem {

namespace {

using random::Engine;

// One case: returns an empty string on success, a description otherwise.
using Case = std::function<std::string(Engine&)>;

struct Suite {
    std::string name;
    Case body;
    bool exhaustive = false;
};

std::string fail(const std::string& what, const PeriodicDigits& d) { return what + " for " + format_digits(d); }

std::string fail(const std::string& what, const DigitWord& w) { return what + " for '" + format_digits(w) + "'"; }

Alphabet any_alphabet(Engine& rng) { return Alphabet(static_cast<std::uint32_t>(random::uniform_int(rng, 2, 5))); }

// Base-q value of an eventually periodic string from its integer readings:
// (A + B / (q^k - 1)) / q^L.
Rational base_q_value(const PeriodicDigits& d) {
    const Integer q(d.alphabet().size());
    Integer a(0);
    Integer b(0);
    Integer qL(1);
    Integer qk(1);
    for (Digit x : d.preperiod()) {
        a = a * q + x;
        qL *= q;
    }
    for (Digit x : d.period()) {
        b = b * q + x;
        qk *= q;
    }
    return Rational::normalize(a * (qk - 1) + b, qL * (qk - 1));
}

std::vector<Suite> suites() {
    std::vector<Suite> s;

    // digits
    s.push_back({"digits.parse_format_roundtrip", [](Engine& rng) -> std::string {
                     const Alphabet a(static_cast<std::uint32_t>(random::uniform_int(rng, 2, 16)));
                     const auto d = random::periodic(rng, a, 6, 6);
                     const auto w = random::word(rng, a, 0, 8);
                     if (std::get<PeriodicDigits>(parse_digits(format_digits(d), a)) != d) {
                         return fail("parse(format(d)) != d", d);
                     }
                     if (std::get<DigitWord>(parse_digits(format_digits(w), a)) != w) {
                         return fail("parse(format(w)) != w", w);
                     }
                     return {};
                 }});
    s.push_back({"digits.twin_involution", [](Engine& rng) -> std::string {
                     const auto d = random::periodic(rng, any_alphabet(rng), 6, 2);
                     const auto t = twin_of(d);
                     if (!t) {
                         return {};
                     }
                     const auto back = twin_of(*t);
                     if (!back || canonicalize(*back) != canonicalize(d)) {
                         return fail("twin_of is not an involution", d);
                     }
                     return {};
                 }});
    s.push_back({"digits.canonicalize", [](Engine& rng) -> std::string {
                     const auto d = random::periodic(rng, any_alphabet(rng), 6, 3);
                     const auto c = canonicalize(d);
                     if (canonicalize(c) != c) {
                         return fail("canonicalize not idempotent", d);
                     }
                     if (auto t = twin_of(d); t && canonicalize(*t) != c) {
                         return fail("twins canonicalize differently", d);
                     }
                     return {};
                 }});
    s.push_back({"digits.compare_lex_order", [](Engine& rng) -> std::string {
                     const Alphabet a = any_alphabet(rng);
                     const auto x = random::periodic(rng, a, 4, 3);
                     const auto y = random::periodic(rng, a, 4, 3);
                     const auto z = random::periodic(rng, a, 4, 3);
                     const auto xy = compare_lex(x, y);
                     if ((compare_lex(y, x) <=> 0) != (0 <=> xy)) {
                         return fail("compare_lex not antisymmetric", x);
                     }
                     const bool same_real = canonicalize(x) == canonicalize(y);
                     if ((xy == 0) != same_real) {
                         return fail("equal does not match twin/identity", x);
                     }
                     if (xy < 0 && compare_lex(y, z) < 0 && compare_lex(x, z) >= 0) {
                         return fail("compare_lex not transitive", x);
                     }
                     if (auto t = twin_of(x); t && compare_lex(x, *t) != 0) {
                         return fail("twins do not compare equal", x);
                     }
                     return {};
                 }});

    // system
    s.push_back({"system.encode_roundtrip_periodic", [](Engine& rng) -> std::string {
                     const auto P = random::probability_vector_in(rng, 2, 5);
                     const auto d = random::canonical_periodic(rng, P.alphabet(), 5, 4);
                     const auto r = encode(P, eval_periodic(P, d), 4096);
                     if (r.kind != EncodeKind::complete || *r.digits != d) {
                         return fail("encode(eval(d)) != d", d);
                     }
                     return {};
                 }});
    s.push_back({"system.encode_reconstructs", [](Engine& rng) -> std::string {
                     const auto P = random::probability_vector_in(rng, 2, 5);
                     const auto x = random::unit_rational(rng, 200);
                     const auto r = encode(P, x, 256);
                     if (r.kind == EncodeKind::complete) {
                         if (eval_periodic(P, *r.digits) != x) {
                             return "complete encoding of " + x.to_string() + " does not decode";
                         }
                         if (r.digits->has_constant_tail(P.alphabet().max_digit()) && x != Rational(1)) {
                             return "encoder emitted a (q-1) tail for " + x.to_string();
                         }
                     } else if (eval_finite(P, *r.prefix) + weight(P, *r.prefix) * r.remainder != x) {
                         return "truncated encoding of " + x.to_string() + " does not reconstruct";
                     }
                     return {};
                 }});
    s.push_back({"system.enclosure", [](Engine& rng) -> std::string {
                     const auto P = random::probability_vector_in(rng, 2, 5);
                     const auto w = random::word(rng, P.alphabet(), 0, 8);
                     const auto e = random::periodic(rng, P.alphabet(), 4, 3);
                     std::vector<Digit> pre(w.letters().begin(), w.letters().end());
                     pre.insert(pre.end(), e.preperiod().begin(), e.preperiod().end());
                     const PeriodicDigits ext(P.alphabet(), pre, {e.period().begin(), e.period().end()});
                     const auto [lo, hi] = eval_prefix_bounds(P, w);
                     const auto v = eval_periodic(P, ext);
                     if (v < lo || v > hi || hi - lo != weight(P, w)) {
                         return fail("extension escapes prefix bounds", ext);
                     }
                     return {};
                 }});
    s.push_back({"system.monotonicity", [](Engine& rng) -> std::string {
                     const auto P = random::probability_vector_in(rng, 2, 5);
                     const auto a = random::canonical_periodic(rng, P.alphabet(), 5, 3);
                     const auto b = random::canonical_periodic(rng, P.alphabet(), 5, 3);
                     const auto order = compare_lex(a, b);
                     const auto values = eval_periodic(P, a) <=> eval_periodic(P, b);
                     if (order != values) {
                         return fail("lexicographic order disagrees with value order", a);
                     }
                     return {};
                 }});
    s.push_back({"system.twin_identity", [](Engine& rng) -> std::string {
                     const auto P = random::probability_vector_in(rng, 2, 5);
                     const auto d = random::twin_source(rng, P.alphabet(), 8);
                     if (eval_periodic(P, d) != eval_periodic(P, *twin_of(d))) {
                         return fail("twins evaluate differently", d);
                     }
                     return {};
                 }});
    s.push_back({"system.uniform_reduction", [](Engine& rng) -> std::string {
                     const auto P = ProbabilityVector::uniform(static_cast<std::uint32_t>(random::uniform_int(rng, 2, 7)));
                     const auto d = random::periodic(rng, P.alphabet(), 6, 5);
                     if (eval_periodic(P, d) != base_q_value(d)) {
                         return fail("uniform evaluation differs from base-q value", d);
                     }
                     return {};
                 }});
    s.push_back({"system.partition_of_unity",
                 [](Engine& rng) -> std::string {
                     const auto P = random::probability_vector(rng, 3);
                     for (std::size_t m = 0; m <= 8; ++m) {
                         Rational total;
                         for (const auto& w : all_words(P.alphabet(), m)) {
                             total += weight(P, w);
                         }
                         if (total != Rational(1)) {
                             return "rank " + std::to_string(m) + " weights sum to " + total.to_string();
                         }
                     }
                     return {};
                 },
                 true});

    // operators
    s.push_back({"operators.permutation_inverse", [](Engine& rng) -> std::string {
                     const Alphabet a = any_alphabet(rng);
                     std::vector<Digit> image(a.size());
                     for (Digit i = 0; i < a.size(); ++i) {
                         image[i] = i;
                     }
                     for (std::size_t i = image.size(); i > 1; --i) {
                         std::swap(image[i - 1], image[random::uniform_int(rng, 0, i - 1)]);
                     }
                     const DigitPermutation perm(image);
                     const auto d = random::periodic(rng, a, 5, 4);
                     if (permute_digits(perm.inverse(), permute_digits(perm, d)) != d) {
                         return fail("inverse permutation does not restore", d);
                     }
                     return {};
                 }});
    s.push_back({"operators.theta_involution", [](Engine& rng) -> std::string {
                     const auto d = random::periodic(rng, Alphabet(3), 6, 4);
                     const auto theta = theta_standard();
                     if (permute_digits(theta, permute_digits(theta, d)) != d) {
                         return fail("theta twice is not the identity", d);
                     }
                     return {};
                 }});
    s.push_back({"operators.flip_involution", [](Engine& rng) -> std::string {
                     const Alphabet a = any_alphabet(rng);
                     const auto d = random::periodic(rng, a, 5, 5);
                     const auto w = random::word(rng, a, 0, 10);
                     for (auto scheme : {AlternatingScheme::odd_positions, AlternatingScheme::even_positions}) {
                         if (flip_alternating(scheme, flip_alternating(scheme, d)) != d) {
                             return fail("flip twice is not the identity", d);
                         }
                         if (flip_alternating(scheme, flip_alternating(scheme, w)) != w) {
                             return fail("flip twice is not the identity", w);
                         }
                     }
                     return {};
                 }});
    s.push_back({"operators.f_identity", [](Engine& rng) -> std::string {
                     const auto P = random::probability_vector_in(rng, 2, 5);
                     const auto d = random::periodic(rng, P.alphabet(), 5, 4);
                     if (f_map(P, DigitPermutation::identity(P.q()), d) != eval_periodic(P, d)) {
                         return fail("identity f differs from evaluation", d);
                     }
                     return {};
                 }});
    s.push_back({"operators.distance_witness",
                 [](Engine&) -> std::string {
                     const auto P = ProbabilityVector::parse("1/2,1/3,1/6");
                     const auto x1 = parse_number("22(0)", P.alphabet());
                     const auto x2 = parse_number("21(0)", P.alphabet());
                     const auto theta = theta_standard();
                     if (eval_periodic(P, x1) - eval_periodic(P, x2) != Rational(1, 18) ||
                         abs(f_map(P, theta, x2) - f_map(P, theta, x1)) != Rational(1, 9)) {
                         return "distance witness values differ from 1/18 and 1/9";
                     }
                     return {};
                 },
                 true});

    // cylinders
    s.push_back({"cylinders.measure_is_width", [](Engine& rng) -> std::string {
                     const auto P = random::probability_vector_in(rng, 2, 5);
                     const auto c = cylinder_of(P, random::word(rng, P.alphabet(), 0, 12));
                     if (c.sup() - c.inf() != c.measure() || c.measure() != weight(P, c.base()) ||
                         c.inf() < Rational(0) || c.sup() > Rational(1) || c.inf() >= c.sup()) {
                         return fail("measure/width mismatch", c.base());
                     }
                     return {};
                 }});
    s.push_back({"cylinders.nesting_and_tiling", [](Engine& rng) -> std::string {
                     const auto P = random::probability_vector_in(rng, 2, 5);
                     const auto c = cylinder_of(P, random::word(rng, P.alphabet(), 0, 11));
                     const auto kids = children(c);
                     Rational total;
                     for (std::size_t i = 0; i < kids.size(); ++i) {
                         const auto& k = kids[i];
                         if (!c.contains(k) || (k.inf() == c.inf() && k.sup() == c.sup())) {
                             return fail("child not strictly nested", k.base());
                         }
                         if (i + 1 < kids.size() && k.sup() != kids[i + 1].inf()) {
                             return fail("gap between consecutive children", k.base());
                         }
                         total += k.measure();
                     }
                     if (kids.front().inf() != c.inf() || kids.back().sup() != c.sup() || total != c.measure()) {
                         return fail("children do not tile the parent", c.base());
                     }
                     return {};
                 }});
    s.push_back({"cylinders.rank_partition",
                 [](Engine& rng) -> std::string {
                     const auto P = random::probability_vector(rng, 3);
                     for (std::size_t m = 1; m <= 8; ++m) {
                         Rational cursor(0);
                         for (const auto& w : all_words(P.alphabet(), m)) {
                             const auto c = cylinder_of(P, w);
                             if (c.inf() != cursor) {
                                 return fail("rank cylinders leave a gap", w);
                             }
                             cursor = c.sup();
                         }
                         if (cursor != Rational(1)) {
                             return "rank " + std::to_string(m) + " cylinders do not end at 1";
                         }
                     }
                     return {};
                 },
                 true});
    s.push_back({"cylinders.alternating_witness",
                 [](Engine&) -> std::string {
                     const auto P = ProbabilityVector::parse("1/2,1/3,1/6");
                     const auto base = parse_word("121200", P.alphabet());
                     const auto flipped = flip_alternating(AlternatingScheme::odd_positions, base);
                     if (format_digits(flipped) != "121220" || cylinder_of(P, base).measure() != Rational(1, 1296) ||
                         alternating_measure(P, flipped) != Rational(1, 3888)) {
                         return "alternating witness values differ from 1/1296 and 1/3888";
                     }
                     return {};
                 },
                 true});
    s.push_back({"cylinders.f_image_measure",
                 [](Engine&) -> std::string {
                     const auto P = ProbabilityVector::parse("1/4,1/2,1/4");
                     const auto theta = theta_standard();
                     bool changed = false;
                     for (std::size_t m = 0; m <= 5 && !changed; ++m) {
                         for (const auto& w : all_words(P.alphabet(), m)) {
                             const auto c = cylinder_of(P, w);
                             if (f_image(c, theta).measure() != c.measure()) {
                                 changed = true;
                                 break;
                             }
                         }
                     }
                     const auto c = cylinder_of(P, parse_word("11122", P.alphabet()));
                     const auto img = f_image(c, theta);
                     if (!changed || c.measure() != Rational(1, 128) || img.measure() != Rational(1, 256) ||
                         format_digits(img.base()) != "22211") {
                         return "f image measures differ from 1/128 and 1/256";
                     }
                     return {};
                 },
                 true});
    return s;
}

}  // namespace

std::size_t CheckReport::passed() const {
    std::size_t n = 0;
    for (const auto& s : suites) {
        n += s.passed;
    }
    return n;
}

std::size_t CheckReport::failed() const {
    std::size_t n = 0;
    for (const auto& s : suites) {
        n += s.failed;
    }
    return n;
}

CheckReport run_checks(std::uint64_t seed, std::size_t cases) {
    CheckReport report;
    std::uint64_t stream = 0;
    for (const auto& suite : suites()) {
        // Independent stream per suite so adding a suite does not shift others.
        Engine rng(seed ^ (0x9e3779b97f4a7c15ULL * ++stream));
        SuiteResult result;
        result.name = suite.name;
        const std::size_t n = suite.exhaustive ? 1 : cases;
        for (std::size_t i = 0; i < n; ++i) {
            std::string error;
            try {
                error = suite.body(rng);
            } catch (const std::exception& e) {
                error = std::string("exception: ") + e.what();
            }
            if (error.empty()) {
                ++result.passed;
            } else {
                if (result.failed++ == 0) {
                    result.first_failure = error;
                }
            }
        }
        report.suites.push_back(std::move(result));
    }
    return report;
}

}  // namespace salem
