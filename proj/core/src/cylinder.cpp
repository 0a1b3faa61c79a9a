#include "salem/cylinder.hpp"

namespace salem {

Cylinder::Cylinder(ProbabilityVector system, DigitWord base)
    : system_(std::move(system)), base_(std::move(base)) {
    require_same_alphabet(system_.alphabet(), base_.alphabet(), "cylinder");
    auto [lo, hi] = eval_prefix_bounds(system_, base_);
    inf_ = std::move(lo);
    sup_ = std::move(hi);
    measure_ = weight(system_, base_);
}

bool Cylinder::contains(const Cylinder& other) const { return inf_ <= other.inf_ && other.sup_ <= sup_; }

Cylinder cylinder_of(const ProbabilityVector& P, const DigitWord& base) { return Cylinder(P, base); }

std::vector<Cylinder> children(const Cylinder& c) {
    std::vector<Cylinder> out;
    out.reserve(c.system().q());
    for (Digit d = 0; d < c.system().q(); ++d) {
        out.emplace_back(c.system(), c.base().append(d));
    }
    return out;
}

Cylinder f_image(const Cylinder& c, const DigitPermutation& perm) {
    return Cylinder(c.system(), permute_digits(perm, c.base()));
}

Rational alternating_measure(const ProbabilityVector& P, const DigitWord& base) {
    require_same_alphabet(P.alphabet(), base.alphabet(), "alternating_measure");
    return weight(P, base);
}

std::vector<DigitWord> all_words(Alphabet alphabet, std::size_t rank) {
    std::vector<DigitWord> out;
    std::vector<Digit> letters(rank, 0);
    while (true) {
        out.emplace_back(alphabet, letters);
        // Odometer increment from the right.
        std::size_t i = rank;
        while (i > 0 && letters[i - 1] == alphabet.max_digit()) {
            letters[--i] = 0;
        }
        if (i == 0) {
            break;
        }
        ++letters[i - 1];
    }
    return out;
}

}  // namespace salem
