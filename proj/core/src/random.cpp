#include "salem/random.hpp"

namespace salem::random {

std::uint64_t uniform_int(Engine& rng, std::uint64_t lo, std::uint64_t hi) {
    // Explicit modulo draw: std::uniform_int_distribution differs between
    // standard libraries, which would make seeded output platform dependent.
    const std::uint64_t span = hi - lo + 1;
    return lo + (span == 0 ? rng() : rng() % span);
}

ProbabilityVector probability_vector(Engine& rng, std::uint32_t q, std::uint64_t max_weight) {
    std::vector<std::uint64_t> w(q);
    std::uint64_t total = 0;
    for (auto& wt : w) {
        wt = uniform_int(rng, 1, max_weight);
        total += wt;
    }
    std::vector<Rational> p;
    p.reserve(q);
    for (auto wt : w) {
        p.emplace_back(static_cast<std::int64_t>(wt), static_cast<std::int64_t>(total));
    }
    return ProbabilityVector(std::move(p));
}

ProbabilityVector probability_vector_in(Engine& rng, std::uint32_t q_lo, std::uint32_t q_hi) {
    return probability_vector(rng, static_cast<std::uint32_t>(uniform_int(rng, q_lo, q_hi)));
}

namespace {

std::vector<Digit> letters(Engine& rng, Alphabet alphabet, std::size_t n) {
    std::vector<Digit> out(n);
    for (auto& d : out) {
        d = static_cast<Digit>(uniform_int(rng, 0, alphabet.max_digit()));
    }
    return out;
}

}  // namespace

DigitWord word(Engine& rng, Alphabet alphabet, std::size_t min_len, std::size_t max_len) {
    return DigitWord(alphabet, letters(rng, alphabet, uniform_int(rng, min_len, max_len)));
}

PeriodicDigits periodic(Engine& rng, Alphabet alphabet, std::size_t max_pre, std::size_t max_per) {
    auto pre = letters(rng, alphabet, uniform_int(rng, 0, max_pre));
    auto per = letters(rng, alphabet, uniform_int(rng, 1, max_per));
    return PeriodicDigits(alphabet, std::move(pre), std::move(per));
}

PeriodicDigits canonical_periodic(Engine& rng, Alphabet alphabet, std::size_t max_pre, std::size_t max_per) {
    return canonicalize(periodic(rng, alphabet, max_pre, max_per));
}

PeriodicDigits twin_source(Engine& rng, Alphabet alphabet, std::size_t max_pre) {
    auto pre = letters(rng, alphabet, uniform_int(rng, 1, std::max<std::size_t>(1, max_pre)));
    pre.back() = static_cast<Digit>(uniform_int(rng, 1, alphabet.max_digit()));
    return PeriodicDigits(alphabet, std::move(pre), {0});
}

Rational unit_rational(Engine& rng, std::uint64_t max_den) {
    const auto den = uniform_int(rng, 1, max_den);
    const auto num = uniform_int(rng, 0, den);
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace salem::random
