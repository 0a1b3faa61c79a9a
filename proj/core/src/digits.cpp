#include "salem/digits.hpp"

#include <algorithm>
#include <numeric>

namespace salem {

namespace {

void check_letters(Alphabet alphabet, std::span<const Digit> letters) {
    for (Digit d : letters) {
        if (!alphabet.contains(d)) {
            throw std::out_of_range("digit " + std::to_string(d) + " is outside the alphabet {0.." +
                                    std::to_string(alphabet.max_digit()) + "}");
        }
    }
}

// Smallest p dividing n with s == s[p..] ++ s[..p].
std::size_t primitive_length(const std::vector<Digit>& s) {
    const std::size_t n = s.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) {
            ok = s[i] == s[i - p];
        }
        if (ok) {
            return p;
        }
    }
    return n;
}

std::vector<Digit> parse_letters(std::string_view text, Alphabet alphabet, std::string_view whole) {
    std::vector<Digit> out;
    if (text.empty()) {
        return out;
    }
    if (alphabet.size() <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw SyntaxError("unexpected character '" + std::string(1, c) + "' in digits '" +
                                  std::string(whole) + "'");
            }
            out.push_back(static_cast<Digit>(c - '0'));
        }
    } else {
        if (text.back() == ',') {
            text.remove_suffix(1);
        }
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto comma = std::min(text.find(',', start), text.size());
            std::string_view token = text.substr(start, comma - start);
            if (token.empty() || token.size() > 9 ||
                !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw SyntaxError("malformed letter '" + std::string(token) + "' in digits '" +
                                  std::string(whole) + "'");
            }
            out.push_back(static_cast<Digit>(std::stoul(std::string(token))));
            start = comma + 1;
        }
    }
    check_letters(alphabet, out);
    return out;
}

std::string format_letters(std::span<const Digit> letters, Alphabet alphabet) {
    std::string out;
    const bool wide = alphabet.size() > 10;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (wide) {
            if (i > 0) {
                out.push_back(',');
            }
            out += std::to_string(letters[i]);
        } else {
            out.push_back(static_cast<char>('0' + letters[i]));
        }
    }
    return out;
}

}  // namespace

Alphabet::Alphabet(std::uint32_t q) : q_(q) {
    if (q < 2) {
        throw std::invalid_argument("alphabet size must be at least 2, got " + std::to_string(q));
    }
}

void require_same_alphabet(Alphabet a, Alphabet b, std::string_view what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": alphabet mismatch (q=" + std::to_string(a.size()) +
                                    " vs q=" + std::to_string(b.size()) + ")");
    }
}

DigitWord::DigitWord(Alphabet alphabet, std::vector<Digit> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
    check_letters(alphabet_, letters_);
}

DigitWord DigitWord::append(Digit d) const {
    std::vector<Digit> next = letters_;
    next.push_back(d);
    return DigitWord(alphabet_, std::move(next));
}

PeriodicDigits::PeriodicDigits(Alphabet alphabet, std::vector<Digit> preperiod, std::vector<Digit> period)
    : alphabet_(alphabet), preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) {
        throw std::invalid_argument("period must be nonempty");
    }
    check_letters(alphabet_, preperiod_);
    check_letters(alphabet_, period_);
    normalize();
}

PeriodicDigits PeriodicDigits::from_word(const DigitWord& w) {
    return PeriodicDigits(w.alphabet(), {w.letters().begin(), w.letters().end()}, {0});
}

void PeriodicDigits::normalize() {
    period_.resize(primitive_length(period_));
    // Absorb trailing preperiod letters into a rotation of the period.
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
        preperiod_.pop_back();
    }
}

Digit PeriodicDigits::at(std::size_t i) const {
    if (i < preperiod_.size()) {
        return preperiod_[i];
    }
    return period_[(i - preperiod_.size()) % period_.size()];
}

DigitObject parse_digits(std::string_view text, Alphabet alphabet) {
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
        if (text.find(')') != std::string_view::npos) {
            throw SyntaxError("unbalanced ')' in digits '" + std::string(text) + "'");
        }
        return DigitWord(alphabet, parse_letters(text, alphabet, text));
    }
    if (text.back() != ')' || text.find('(', open + 1) != std::string_view::npos ||
        text.find(')') != text.size() - 1) {
        throw SyntaxError("expected 'prefix(period)' in digits '" + std::string(text) + "'");
    }
    std::string_view period_text = text.substr(open + 1, text.size() - open - 2);
    if (period_text.empty()) {
        throw SyntaxError("empty period in digits '" + std::string(text) + "'");
    }
    auto pre = parse_letters(text.substr(0, open), alphabet, text);
    auto per = parse_letters(period_text, alphabet, text);
    return PeriodicDigits(alphabet, std::move(pre), std::move(per));
}

DigitWord parse_word(std::string_view text, Alphabet alphabet) {
    auto parsed = parse_digits(text, alphabet);
    if (auto* w = std::get_if<DigitWord>(&parsed)) {
        return *w;
    }
    throw SyntaxError("expected a finite word, got periodic digits '" + std::string(text) + "'");
}

PeriodicDigits parse_number(std::string_view text, Alphabet alphabet) {
    auto parsed = parse_digits(text, alphabet);
    if (auto* w = std::get_if<DigitWord>(&parsed)) {
        return PeriodicDigits::from_word(*w);
    }
    return std::get<PeriodicDigits>(parsed);
}

std::string format_digits(const DigitWord& w) { return format_letters(w.letters(), w.alphabet()); }

std::string format_digits(const PeriodicDigits& d) {
    return format_letters(d.preperiod(), d.alphabet()) + "(" + format_letters(d.period(), d.alphabet()) + ")";
}

std::string format_digits(const DigitObject& d) {
    return std::visit([](const auto& v) { return format_digits(v); }, d);
}

std::optional<PeriodicDigits> twin_of(const PeriodicDigits& d) {
    const Digit top = d.alphabet().max_digit();
    auto pre = d.preperiod();
    if (pre.empty()) {
        return std::nullopt;  // (0) is 0, (q-1) is 1, anything else is not q-rational
    }
    std::vector<Digit> head(pre.begin(), pre.end() - 1);
    const Digit last = pre.back();
    // Normal form guarantees last != tail letter.
    if (d.has_constant_tail(0)) {
        head.push_back(last - 1);
        return PeriodicDigits(d.alphabet(), std::move(head), {top});
    }
    if (d.has_constant_tail(top)) {
        head.push_back(last + 1);
        return PeriodicDigits(d.alphabet(), std::move(head), {0});
    }
    return std::nullopt;
}

PeriodicDigits canonicalize(const PeriodicDigits& d) {
    if (d.has_constant_tail(d.alphabet().max_digit())) {
        if (auto twin = twin_of(d)) {
            return *twin;
        }
    }
    return d;
}

std::strong_ordering compare_lex(const PeriodicDigits& a, const PeriodicDigits& b) {
    require_same_alphabet(a.alphabet(), b.alphabet(), "compare_lex");
    const PeriodicDigits ca = canonicalize(a);
    const PeriodicDigits cb = canonicalize(b);
    // Past max(preperiods) both streams are periodic with period lcm(periods).
    const std::size_t horizon = std::max(ca.preperiod().size(), cb.preperiod().size()) +
                                std::lcm(ca.period().size(), cb.period().size());
    for (std::size_t i = 0; i < horizon; ++i) {
        if (auto c = ca.at(i) <=> cb.at(i); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace salem
