#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "decindex/natural.hpp"

namespace decindex {

/// Default character budget for rendering and for exponent expansion.
inline constexpr std::size_t kDefaultMaxRenderDigits = 1'000'000;

/// A decimal numeral held digit-for-digit, so no value is ever rounded.
///
/// integer_digits never has leading zeros except for the single digit "0";
/// fraction_digits is kept verbatim (leading and trailing zeros included);
/// negative is false whenever every digit is zero.
struct ExactDecimal {
    bool negative = false;
    std::string integer_digits = "0";
    std::string fraction_digits;

    bool is_zero() const;
    friend bool operator==(const ExactDecimal&, const ExactDecimal&) = default;
};

enum class Sign : int { positive = 1, negative = -1 };

/// (sign, n1, n2, n3): integer part, count of leading fractional zeros, and the
/// significant fractional digits read as an integer.
struct CanonicalTuple {
    Sign sign = Sign::positive;
    Natural n1;
    Natural n2;
    Natural n3;

    bool is_zero() const { return n1.is_zero() && n2.is_zero() && n3.is_zero(); }
    friend bool operator==(const CanonicalTuple&, const CanonicalTuple&) = default;
};

/// Composition constraints: n3 = 0 implies n2 = 0, and zero is positive.
bool is_valid(const CanonicalTuple& t);
/// is_valid plus n3 carries no trailing zero.
bool is_strict_canonical(const CanonicalTuple& t);
/// Throws CanonicalityError unless is_valid(t).
void require_valid(const CanonicalTuple& t);

/// Grammar: [+|-] digits ["." digits] [(e|E) [+|-] digits]
///       or [+|-] "." digits [(e|E) [+|-] digits]
/// Exponents shift digits; they are rejected with ParseError if the expansion
/// would need more than max_digits digits.
ExactDecimal parse_decimal(std::string_view text, std::size_t max_digits = kDefaultMaxRenderDigits);

CanonicalTuple canonicalize(const ExactDecimal& value);

/// Renders "n1", or "n1." followed by n2 zeros and n3, with a leading '-' for
/// negative tuples. Zero renders as "0". Throws RenderBudgetExceeded rather
/// than truncating.
std::string reconstruct(const CanonicalTuple& t, std::size_t max_render_digits = kDefaultMaxRenderDigits);

/// Characters reconstruct() would produce, computed without rendering n2 zeros.
Natural rendered_length(const CanonicalTuple& t);

/// n1 + n2 + n3.
Natural complexity(const CanonicalTuple& t);

/// "(+1, 3, 0, 14159)"
std::string to_string(const CanonicalTuple& t);

}  // namespace decindex
