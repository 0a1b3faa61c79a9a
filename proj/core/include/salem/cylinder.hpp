#pragma once

/**
 * @file cylinder.hpp
 * @brief Cylinder sets: all points whose representation starts with a fixed
 * base word c_1...c_m. In the P_q system a rank-m cylinder is the closed
 * interval [value of base(0), value of base(q-1)] with Lebesgue measure
 * p[c_1] * ... * p[c_m]. Its q children tile it left to right with no gaps.
 */

#include <vector>

#include "salem/digits.hpp"
#include "salem/operators.hpp"
#include "salem/system.hpp"

namespace salem {

class Cylinder {
public:
    Cylinder(ProbabilityVector system, DigitWord base);

    [[nodiscard]] const ProbabilityVector& system() const { return system_; }
    [[nodiscard]] const DigitWord& base() const { return base_; }
    [[nodiscard]] std::size_t rank() const { return base_.size(); }
    [[nodiscard]] const Rational& inf() const { return inf_; }
    [[nodiscard]] const Rational& sup() const { return sup_; }
    [[nodiscard]] const Rational& measure() const { return measure_; }

    /// Interval containment, inclusive at both ends.
    [[nodiscard]] bool contains(const Cylinder& other) const;
    [[nodiscard]] bool contains(const Rational& x) const { return inf_ <= x && x <= sup_; }

private:
    ProbabilityVector system_;
    DigitWord base_;
    Rational inf_;
    Rational sup_;
    Rational measure_;
};

Cylinder cylinder_of(const ProbabilityVector& P, const DigitWord& base);

/// Cylinders with bases base.0, ..., base.(q-1), in digit order.
std::vector<Cylinder> children(const Cylinder& c);

/// The cylinder with the letterwise-permuted base, in the same system.
Cylinder f_image(const Cylinder& c, const DigitPermutation& perm);

/// Product measure read directly off an alternating-system base.
Rational alternating_measure(const ProbabilityVector& P, const DigitWord& base);

/// All q^rank bases of the given rank, in lexicographic order.
std::vector<DigitWord> all_words(Alphabet alphabet, std::size_t rank);

}  // namespace salem
