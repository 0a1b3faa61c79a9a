#pragma once

/**
 * @file operators.hpp
 * @brief Digit-level operators: permutations (theta), the induced map f, and
 * the alternating flip i -> (q-1) - i at odd or even positions.
 *
 * f acts on representations, not on reals. At q-rational points the two
 * twins can map to different values; callers pass canonical digits when they
 * want f as a function of x.
 */

#include <vector>

#include "salem/digits.hpp"
#include "salem/system.hpp"

namespace salem {

class DigitPermutation {
public:
    /// Throws std::invalid_argument unless `image` is a bijection on {0..q-1}.
    explicit DigitPermutation(std::vector<Digit> image);

    static DigitPermutation identity(std::uint32_t q);

    /// Comma-separated images, e.g. `0,2,1`.
    static DigitPermutation parse(std::string_view text);

    [[nodiscard]] Alphabet alphabet() const { return Alphabet(static_cast<std::uint32_t>(image_.size())); }
    [[nodiscard]] Digit operator()(Digit d) const { return image_[d]; }
    [[nodiscard]] std::span<const Digit> image() const { return image_; }
    [[nodiscard]] DigitPermutation inverse() const;

    friend bool operator==(const DigitPermutation&, const DigitPermutation&) = default;

private:
    std::vector<Digit> image_;
};

/// 0 -> 0, 1 -> 2, 2 -> 1 on the ternary alphabet.
DigitPermutation theta_standard();

DigitWord permute_digits(const DigitPermutation& perm, const DigitWord& w);
PeriodicDigits permute_digits(const DigitPermutation& perm, const PeriodicDigits& d);

/// eval_periodic(P, permute_digits(perm, x_digits)).
Rational f_map(const ProbabilityVector& P, const DigitPermutation& perm, const PeriodicDigits& x_digits);

/// Which 1-indexed positions get flipped.
enum class AlternatingScheme { odd_positions, even_positions };

AlternatingScheme parse_scheme(std::string_view text);  // "odd" | "even"
std::string_view to_string(AlternatingScheme scheme);

DigitWord flip_alternating(AlternatingScheme scheme, const DigitWord& w);

/// Odd-length periods are doubled before flipping so that the flip pattern
/// lines up with the period; the result is renormalized.
PeriodicDigits flip_alternating(AlternatingScheme scheme, const PeriodicDigits& d);

}  // namespace salem
