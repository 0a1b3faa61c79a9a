#include "salem/operators.hpp"

#include <algorithm>

namespace salem {

namespace {

bool flips(AlternatingScheme scheme, std::size_t zero_based) {
    const bool odd_position = zero_based % 2 == 0;
    return scheme == AlternatingScheme::odd_positions ? odd_position : !odd_position;
}

}  // namespace

DigitPermutation::DigitPermutation(std::vector<Digit> image) : image_(std::move(image)) {
    if (image_.size() < 2) {
        throw std::invalid_argument("permutation needs at least 2 images");
    }
    std::vector<bool> hit(image_.size(), false);
    for (Digit d : image_) {
        if (d >= image_.size() || hit[d]) {
            throw std::invalid_argument("images do not form a bijection on {0.." +
                                        std::to_string(image_.size() - 1) + "}");
        }
        hit[d] = true;
    }
}

DigitPermutation DigitPermutation::identity(std::uint32_t q) {
    std::vector<Digit> image(q);
    for (Digit d = 0; d < q; ++d) {
        image[d] = d;
    }
    return DigitPermutation(std::move(image));
}

DigitPermutation DigitPermutation::parse(std::string_view text) {
    std::vector<Digit> image;
    std::size_t start = 0;
    while (true) {
        const auto comma = std::min(text.find(',', start), text.size());
        const std::string_view token = text.substr(start, comma - start);
        if (token.empty() || token.size() > 9 ||
            !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("malformed permutation image '" + std::string(token) + "'");
        }
        image.push_back(static_cast<Digit>(std::stoul(std::string(token))));
        if (comma == text.size()) {
            break;
        }
        start = comma + 1;
    }
    return DigitPermutation(std::move(image));
}

DigitPermutation DigitPermutation::inverse() const {
    std::vector<Digit> inv(image_.size());
    for (Digit d = 0; d < image_.size(); ++d) {
        inv[image_[d]] = d;
    }
    return DigitPermutation(std::move(inv));
}

DigitPermutation theta_standard() { return DigitPermutation({0, 2, 1}); }

DigitWord permute_digits(const DigitPermutation& perm, const DigitWord& w) {
    require_same_alphabet(perm.alphabet(), w.alphabet(), "permute_digits");
    std::vector<Digit> out;
    out.reserve(w.size());
    for (Digit d : w.letters()) {
        out.push_back(perm(d));
    }
    return DigitWord(w.alphabet(), std::move(out));
}

PeriodicDigits permute_digits(const DigitPermutation& perm, const PeriodicDigits& d) {
    const DigitWord pre = permute_digits(perm, d.preperiod_word());
    const DigitWord per = permute_digits(perm, d.period_word());
    return PeriodicDigits(d.alphabet(), {pre.letters().begin(), pre.letters().end()},
                          {per.letters().begin(), per.letters().end()});
}

Rational f_map(const ProbabilityVector& P, const DigitPermutation& perm, const PeriodicDigits& x_digits) {
    return eval_periodic(P, permute_digits(perm, x_digits));
}

AlternatingScheme parse_scheme(std::string_view text) {
    if (text == "odd") {
        return AlternatingScheme::odd_positions;
    }
    if (text == "even") {
        return AlternatingScheme::even_positions;
    }
    throw std::invalid_argument("flip scheme must be 'odd' or 'even', got '" + std::string(text) + "'");
}

std::string_view to_string(AlternatingScheme scheme) {
    return scheme == AlternatingScheme::odd_positions ? "odd" : "even";
}

DigitWord flip_alternating(AlternatingScheme scheme, const DigitWord& w) {
    const Digit top = w.alphabet().max_digit();
    std::vector<Digit> out(w.letters().begin(), w.letters().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (flips(scheme, i)) {
            out[i] = top - out[i];
        }
    }
    return DigitWord(w.alphabet(), std::move(out));
}

PeriodicDigits flip_alternating(AlternatingScheme scheme, const PeriodicDigits& d) {
    const Digit top = d.alphabet().max_digit();
    std::vector<Digit> pre(d.preperiod().begin(), d.preperiod().end());
    std::vector<Digit> per(d.period().begin(), d.period().end());
    if (per.size() % 2 == 1) {
        per.insert(per.end(), d.period().begin(), d.period().end());
    }
    for (std::size_t i = 0; i < pre.size(); ++i) {
        if (flips(scheme, i)) {
            pre[i] = top - pre[i];
        }
    }
    for (std::size_t j = 0; j < per.size(); ++j) {
        if (flips(scheme, pre.size() + j)) {
            per[j] = top - per[j];
        }
    }
    return PeriodicDigits(d.alphabet(), std::move(pre), std::move(per));
}

}  // namespace salem
