#pragma once

/**
 * @file digits.hpp
 * @brief Digit alphabets, finite words and eventually periodic digit strings.
 *
 * Nothing here depends on a probability vector. A PeriodicDigits value is
 * always stored in normal form (primitive period, shortest preperiod), so two
 * values compare equal exactly when they spell the same infinite stream.
 *
 * Text grammar: `prefix` or `prefix(period)`. For q <= 10 every letter is one
 * character; for q > 10 letters are comma-separated decimal numbers, e.g.
 * `10,3(0,11)`.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace salem {

using Digit = std::uint32_t;

/// Malformed digit text (as opposed to a letter outside the alphabet,
/// which raises std::out_of_range).
class SyntaxError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Alphabet {
public:
    explicit Alphabet(std::uint32_t q);

    [[nodiscard]] std::uint32_t size() const { return q_; }
    [[nodiscard]] Digit max_digit() const { return q_ - 1; }
    [[nodiscard]] bool contains(Digit d) const { return d < q_; }

    friend bool operator==(Alphabet, Alphabet) = default;

private:
    std::uint32_t q_;
};

/// Throws std::invalid_argument unless both alphabets have the same base.
void require_same_alphabet(Alphabet a, Alphabet b, std::string_view what);

class DigitWord {
public:
    explicit DigitWord(Alphabet alphabet, std::vector<Digit> letters = {});

    [[nodiscard]] Alphabet alphabet() const { return alphabet_; }
    [[nodiscard]] std::span<const Digit> letters() const { return letters_; }
    [[nodiscard]] std::size_t size() const { return letters_.size(); }
    [[nodiscard]] bool empty() const { return letters_.empty(); }
    [[nodiscard]] Digit operator[](std::size_t i) const { return letters_[i]; }

    /// The word followed by one more letter.
    [[nodiscard]] DigitWord append(Digit d) const;

    friend bool operator==(const DigitWord&, const DigitWord&) = default;

private:
    Alphabet alphabet_;
    std::vector<Digit> letters_;
};

class PeriodicDigits {
public:
    /// Throws std::out_of_range for letters outside the alphabet and
    /// std::invalid_argument for an empty period.
    PeriodicDigits(Alphabet alphabet, std::vector<Digit> preperiod, std::vector<Digit> period);

    /// The number a finite word denotes: w followed by (0).
    static PeriodicDigits from_word(const DigitWord& w);

    [[nodiscard]] Alphabet alphabet() const { return alphabet_; }
    [[nodiscard]] std::span<const Digit> preperiod() const { return preperiod_; }
    [[nodiscard]] std::span<const Digit> period() const { return period_; }

    /// Letter at 0-based position i of the infinite stream.
    [[nodiscard]] Digit at(std::size_t i) const;

    [[nodiscard]] DigitWord preperiod_word() const { return DigitWord(alphabet_, preperiod_); }
    [[nodiscard]] DigitWord period_word() const { return DigitWord(alphabet_, period_); }

    /// Period is a single repeated letter d.
    [[nodiscard]] bool has_constant_tail(Digit d) const { return period_.size() == 1 && period_[0] == d; }

    friend bool operator==(const PeriodicDigits&, const PeriodicDigits&) = default;

private:
    void normalize();

    Alphabet alphabet_;
    std::vector<Digit> preperiod_;
    std::vector<Digit> period_;
};

using DigitObject = std::variant<DigitWord, PeriodicDigits>;

DigitObject parse_digits(std::string_view text, Alphabet alphabet);

/// Parses text that must be a finite word.
DigitWord parse_word(std::string_view text, Alphabet alphabet);

/// Parses text as a number: a bare word w is read as w(0).
PeriodicDigits parse_number(std::string_view text, Alphabet alphabet);

std::string format_digits(const DigitWord& w);
std::string format_digits(const PeriodicDigits& d);
std::string format_digits(const DigitObject& d);

/// The other representation of the same real, if one exists:
/// `...i(0)` <-> `...[i-1](q-1)`. None for 0, 1 and non-rational tails.
std::optional<PeriodicDigits> twin_of(const PeriodicDigits& d);

/// Representative of the twin class: prefers the (0) tail, except that 1
/// is canonically `(q-1)`. Idempotent.
PeriodicDigits canonicalize(const PeriodicDigits& d);

/// Lexicographic order of the canonical streams. `equal` iff both strings
/// denote the same real. Throws std::invalid_argument on alphabet mismatch.
std::strong_ordering compare_lex(const PeriodicDigits& a, const PeriodicDigits& b);

}  // namespace salem
