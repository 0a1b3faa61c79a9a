#pragma once

/**
 * @file system.hpp
 * @brief The P_q system: probability vector, thresholds, Salem series.
 *
 * A digit string i_1 i_2 ... denotes
 *
 *     S = beta[i_1] + sum_{k>=2} beta[i_k] * p[i_1] * ... * p[i_{k-1}]
 *
 * with beta[i] = p[0] + ... + p[i-1]. Finite words are evaluated as w(0);
 * eventually periodic strings use the geometric closed form of the tail.
 */

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "salem/digits.hpp"
#include "salem/rational.hpp"

namespace salem {

class ProbabilityVector {
public:
    /// Requires q >= 2 entries, each strictly between 0 and 1, summing to 1.
    /// Throws std::invalid_argument otherwise.
    explicit ProbabilityVector(std::vector<Rational> p);

    static ProbabilityVector uniform(std::uint32_t q);

    /// Comma-separated fractions, e.g. `1/2,1/3,1/6`.
    static ProbabilityVector parse(std::string_view text);

    [[nodiscard]] Alphabet alphabet() const { return Alphabet(static_cast<std::uint32_t>(p_.size())); }
    [[nodiscard]] std::uint32_t q() const { return static_cast<std::uint32_t>(p_.size()); }
    [[nodiscard]] const Rational& p(Digit d) const { return p_[d]; }
    [[nodiscard]] const Rational& beta(Digit d) const { return beta_[d]; }
    [[nodiscard]] std::span<const Rational> probabilities() const { return p_; }

    [[nodiscard]] std::string to_string() const;

    /// Integer form of the system: L = lcm of the denominators of p, with
    /// p[d] = scaled_p(d) / L and beta[d] = scaled_beta(d) / L.
    [[nodiscard]] const Integer& common_denominator() const { return lcm_; }
    [[nodiscard]] const Integer& scaled_p(Digit d) const { return scaled_p_[d]; }
    [[nodiscard]] const Integer& scaled_beta(Digit d) const { return scaled_beta_[d]; }

    friend bool operator==(const ProbabilityVector& a, const ProbabilityVector& b) { return a.p_ == b.p_; }

private:
    std::vector<Rational> p_;
    std::vector<Rational> beta_;  // q + 1 entries
    Integer lcm_;
    std::vector<Integer> scaled_p_;
    std::vector<Integer> scaled_beta_;  // q + 1 entries
};

struct BetaVector {
    std::vector<Rational> values;  // beta_0 = 0, ..., beta_q = 1
};

BetaVector beta_vector(const ProbabilityVector& P);

/// Product of p over the letters of w; 1 for the empty word.
Rational weight(const ProbabilityVector& P, const DigitWord& w);

/// Value of w(0); 0 for the empty word.
Rational eval_finite(const ProbabilityVector& P, const DigitWord& w);

Rational eval_periodic(const ProbabilityVector& P, const PeriodicDigits& d);

struct Interval {
    Rational lo;
    Rational hi;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed interval containing every extension of w: [eval_finite(w), + weight(w)].
Interval eval_prefix_bounds(const ProbabilityVector& P, const DigitWord& w);

enum class EncodeKind { complete, truncated };

struct EncodeResult {
    EncodeKind kind;
    /// Set when kind == complete (canonical form).
    std::optional<PeriodicDigits> digits;
    /// Set when kind == truncated: the emitted prefix and the exact residual,
    /// with x = eval_finite(prefix) + weight(prefix) * remainder.
    std::optional<DigitWord> prefix;
    Rational remainder;
};

/// Greedy digit extraction with exact cycle detection. Stops after
/// max_digits letters without a repeated remainder. Throws std::domain_error
/// for x outside [0, 1] and std::invalid_argument for a zero budget.
EncodeResult encode(const ProbabilityVector& P, const Rational& x, std::size_t max_digits);

}  // namespace salem
