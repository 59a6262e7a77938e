#include "decindex/decimal.hpp"

#include <algorithm>
#include <cstdint>

#include "decindex/errors.hpp"

namespace decindex {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool all_zero(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0'; });
}

std::string strip_leading_zeros(std::string s) {
    const auto first = s.find_first_not_of('0');
    if (first == std::string::npos) return "0";
    s.erase(0, first);
    return s;
}

}  // namespace

bool ExactDecimal::is_zero() const { return all_zero(integer_digits) && all_zero(fraction_digits); }

bool is_valid(const CanonicalTuple& t) {
    if (t.n3.is_zero() && !t.n2.is_zero()) return false;
    if (t.is_zero() && t.sign != Sign::positive) return false;
    return true;
}

bool is_strict_canonical(const CanonicalTuple& t) {
    if (!is_valid(t)) return false;
    if (t.n3.is_zero()) return true;
    // Last decimal digit, read without a counted division.
    const std::string digits = t.n3.to_string();
    return digits.back() != '0';
}

void require_valid(const CanonicalTuple& t) {
    if (t.n3.is_zero() && !t.n2.is_zero())
        throw CanonicalityError("tuple " + to_string(t) + " has leading zeros but no fractional digits");
    if (t.is_zero() && t.sign != Sign::positive)
        throw CanonicalityError("zero must carry the positive sign");
}

ExactDecimal parse_decimal(std::string_view text, std::size_t max_digits) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }

    const std::size_t int_begin = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    std::string_view int_part = text.substr(int_begin, i - int_begin);

    std::string_view frac_part;
    if (i < text.size() && text[i] == '.') {
        ++i;
        const std::size_t frac_begin = i;
        while (i < text.size() && is_digit(text[i])) ++i;
        if (i == frac_begin) throw ParseError("expected digit after decimal point", i);
        frac_part = text.substr(frac_begin, i - frac_begin);
    }
    if (int_part.empty() && frac_part.empty()) throw ParseError("expected digit", i);

    std::int64_t exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        const std::size_t exp_begin = i;
        while (i < text.size() && is_digit(text[i])) ++i;
        if (i == exp_begin) throw ParseError("expected exponent digits", i);
        const std::string_view exp_digits = text.substr(exp_begin, i - exp_begin);
        const auto significant = exp_digits.find_first_not_of('0');
        if (significant != std::string_view::npos && exp_digits.size() - significant > 15)
            throw ParseError("exponent too large", exp_begin);
        for (char c : exp_digits) exponent = exponent * 10 + (c - '0');
        if (exp_negative) exponent = -exponent;
    }
    if (i != text.size()) {
        if (text[i] == '.') throw ParseError("unexpected second decimal point", i);
        throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }

    std::string digits;
    digits.reserve(int_part.size() + frac_part.size());
    digits.append(int_part);
    digits.append(frac_part);
    // Decimal point sits after `point` digits of `digits`; the exponent moves it.
    const std::int64_t point = static_cast<std::int64_t>(int_part.size()) + exponent;
    const std::int64_t len = static_cast<std::int64_t>(digits.size());
    const std::int64_t needed = std::max(point, len) - std::min<std::int64_t>(point, 0);
    if (needed > static_cast<std::int64_t>(max_digits)) throw ParseError("exponent expansion exceeds digit budget", 0);

    ExactDecimal out;
    if (point <= 0) {
        out.integer_digits = "0";
        out.fraction_digits = std::string(static_cast<std::size_t>(-point), '0') + digits;
    } else if (point >= len) {
        out.integer_digits = strip_leading_zeros(digits + std::string(static_cast<std::size_t>(point - len), '0'));
        out.fraction_digits.clear();
    } else {
        out.integer_digits = strip_leading_zeros(digits.substr(0, static_cast<std::size_t>(point)));
        out.fraction_digits = digits.substr(static_cast<std::size_t>(point));
    }
    out.negative = negative && !out.is_zero();
    return out;
}

CanonicalTuple canonicalize(const ExactDecimal& value) {
    CanonicalTuple t;
    t.n1 = Natural::from_string(value.integer_digits);

    std::string_view frac = value.fraction_digits;
    const auto last = frac.find_last_not_of('0');
    if (last != std::string_view::npos) {
        frac = frac.substr(0, last + 1);
        const auto first = frac.find_first_not_of('0');
        t.n2 = Natural{static_cast<std::uint64_t>(first)};
        t.n3 = Natural::from_string(frac.substr(first));
    }
    t.sign = (value.negative && !t.is_zero()) ? Sign::negative : Sign::positive;
    return t;
}

Natural rendered_length(const CanonicalTuple& t) {
    Natural len{t.n1.digit_count()};
    if (t.sign == Sign::negative) len += 1;
    if (!t.n3.is_zero()) len += Natural{1} + t.n2 + Natural{t.n3.digit_count()};
    return len;
}

std::string reconstruct(const CanonicalTuple& t, std::size_t max_render_digits) {
    require_valid(t);
    const Natural len = rendered_length(t);
    if (len > Natural{max_render_digits}) {
        throw RenderBudgetExceeded("rendering needs " + len.to_string() + " characters, budget is " +
                                   std::to_string(max_render_digits));
    }
    std::string out;
    out.reserve(len.to_u64());
    if (t.sign == Sign::negative) out += '-';
    out += t.n1.to_string();
    if (!t.n3.is_zero()) {
        out += '.';
        out.append(t.n2.to_u64(), '0');
        out += t.n3.to_string();
    }
    return out;
}

Natural complexity(const CanonicalTuple& t) { return t.n1 + t.n2 + t.n3; }

std::string to_string(const CanonicalTuple& t) {
    return std::string("(") + (t.sign == Sign::positive ? "+1" : "-1") + ", " + t.n1.to_string() + ", " +
           t.n2.to_string() + ", " + t.n3.to_string() + ")";
}

}  // namespace decindex
