#include "salem/system.hpp"

#include <unordered_map>

namespace salem {

ProbabilityVector::ProbabilityVector(std::vector<Rational> p) : p_(std::move(p)) {
    if (p_.size() < 2) {
        throw std::invalid_argument("probability vector needs at least 2 entries");
    }
    const Rational zero(0);
    const Rational one(1);
    Rational total;
    for (std::size_t t = 0; t < p_.size(); ++t) {
        if (p_[t] <= zero || p_[t] >= one) {
            throw std::invalid_argument("p_" + std::to_string(t) + " = " + p_[t].to_string() +
                                        " is not strictly between 0 and 1");
        }
        total += p_[t];
    }
    if (total != one) {
        throw std::invalid_argument("probabilities sum to " + total.to_string() + ", not 1");
    }
    beta_.reserve(p_.size() + 1);
    beta_.push_back(zero);
    for (const auto& pt : p_) {
        beta_.push_back(beta_.back() + pt);
    }
    lcm_ = 1;
    for (const auto& pt : p_) {
        mpz_lcm(lcm_.get_mpz_t(), lcm_.get_mpz_t(), pt.denominator().get_mpz_t());
    }
    for (const auto& pt : p_) {
        scaled_p_.push_back(pt.numerator() * (lcm_ / pt.denominator()));
    }
    scaled_beta_.push_back(Integer(0));
    for (const auto& a : scaled_p_) {
        scaled_beta_.push_back(scaled_beta_.back() + a);
    }
}

ProbabilityVector ProbabilityVector::uniform(std::uint32_t q) {
    if (q < 2) {
        throw std::invalid_argument("uniform system needs q >= 2");
    }
    return ProbabilityVector(std::vector<Rational>(q, Rational(1, q)));
}

ProbabilityVector ProbabilityVector::parse(std::string_view text) {
    std::vector<Rational> p;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        p.push_back(Rational::parse(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return ProbabilityVector(std::move(p));
}

std::string ProbabilityVector::to_string() const {
    std::string out;
    for (std::size_t t = 0; t < p_.size(); ++t) {
        if (t > 0) {
            out.push_back(',');
        }
        out += p_[t].to_string();
    }
    return out;
}

BetaVector beta_vector(const ProbabilityVector& P) {
    BetaVector b;
    for (Digit i = 0; i <= P.q(); ++i) {
        b.values.push_back(P.beta(i));
    }
    return b;
}

Rational weight(const ProbabilityVector& P, const DigitWord& w) {
    require_same_alphabet(P.alphabet(), w.alphabet(), "weight");
    Integer num(1);
    Integer den(1);
    for (Digit d : w.letters()) {
        num *= P.scaled_p(d);
        den *= P.common_denominator();
    }
    return Rational::normalize(num, den);
}

Rational eval_finite(const ProbabilityVector& P, const DigitWord& w) {
    require_same_alphabet(P.alphabet(), w.alphabet(), "eval_finite");
    // Horner from the right, v = beta[w_k] + p[w_k] * v, kept as num / L^k
    // so only the final result is reduced.
    const Integer& L = P.common_denominator();
    Integer num(0);
    Integer den(1);
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        num = P.scaled_beta(*it) * den + P.scaled_p(*it) * num;
        den *= L;
    }
    return Rational::normalize(num, den);
}

Rational eval_periodic(const ProbabilityVector& P, const PeriodicDigits& d) {
    require_same_alphabet(P.alphabet(), d.alphabet(), "eval_periodic");
    const DigitWord pre = d.preperiod_word();
    const DigitWord per = d.period_word();
    const Rational tail = eval_finite(P, per) / (Rational(1) - weight(P, per));
    return eval_finite(P, pre) + weight(P, pre) * tail;
}

Interval eval_prefix_bounds(const ProbabilityVector& P, const DigitWord& w) {
    Rational lo = eval_finite(P, w);
    Rational hi = lo + weight(P, w);
    return {std::move(lo), std::move(hi)};
}

namespace {

// Reduced fraction in raw integers; equality is value equality.
struct Remainder {
    Integer num;
    Integer den;

    friend bool operator==(const Remainder&, const Remainder&) = default;
};

struct RemainderHash {
    std::size_t operator()(const Remainder& r) const noexcept {
        return mpz_get_ui(r.num.get_mpz_t()) * 0x9e3779b97f4a7c15ULL ^ mpz_get_ui(r.den.get_mpz_t()) ^
               mpz_sizeinbase(r.den.get_mpz_t(), 2);
    }
};

}  // namespace

EncodeResult encode(const ProbabilityVector& P, const Rational& x, std::size_t max_digits) {
    if (x < Rational(0) || x > Rational(1)) {
        throw std::domain_error("x = " + x.to_string() + " is outside [0, 1]");
    }
    if (max_digits == 0) {
        throw std::invalid_argument("digit budget must be positive");
    }
    const Alphabet alphabet = P.alphabet();
    const Integer& L = P.common_denominator();

    std::vector<Digit> digits;
    std::unordered_map<Remainder, std::size_t, RemainderHash> seen;  // remainder -> index of the digit it produced
    auto close_cycle = [&](std::size_t start) {
        const auto split = digits.begin() + static_cast<std::ptrdiff_t>(start);
        PeriodicDigits d(alphabet, std::vector<Digit>(digits.begin(), split), std::vector<Digit>(split, digits.end()));
        return EncodeResult{EncodeKind::complete, canonicalize(d), std::nullopt, Rational(0)};
    };

    Remainder y{x.numerator(), x.denominator()};
    Integer scaled;
    Integer g;
    while (digits.size() < max_digits) {
        if (y.num == y.den) {
            // Only reachable at the start: remainders after a step are < 1.
            return {EncodeKind::complete, canonicalize(PeriodicDigits(alphabet, digits, {alphabet.max_digit()})),
                    std::nullopt, Rational(0)};
        }
        auto [it, inserted] = seen.emplace(y, digits.size());
        if (!inserted) {
            return close_cycle(it->second);
        }
        // beta[i] <= y < beta[i+1], compared as scaled_beta * den <= L * num.
        scaled = L * y.num;
        Digit i = 0;
        while (P.scaled_beta(i + 1) * y.den <= scaled) {
            ++i;
        }
        digits.push_back(i);

        // y <- (y - beta[i]) / p[i] = (L*num - b*den) / (a*den).
        Integer num = scaled - P.scaled_beta(i) * y.den;
        Integer den = y.den;
        Integer a = P.scaled_p(i);
        // With num/den reduced, any prime shared by the new numerator and den
        // divides L, so gcd(den, L) finds it without a big-by-big gcd.
        while (true) {
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), L.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            if (g == 1) {
                break;
            }
            mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
        }
        // Remaining common factors can only come from a.
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), a.get_mpz_t());
        if (g != 1) {
            mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        }
        if (num == 0) {
            den = 1;
        } else {
            den *= a;
        }
        y = Remainder{std::move(num), std::move(den)};
    }
    // The budget can run out just as the last remainder closes a cycle.
    if (auto it = seen.find(y); it != seen.end()) {
        return close_cycle(it->second);
    }
    return {EncodeKind::truncated, std::nullopt, DigitWord(alphabet, std::move(digits)),
            Rational::normalize(y.num, y.den)};
}

}  // namespace salem
