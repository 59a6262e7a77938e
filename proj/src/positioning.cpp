#include "decindex/positioning.hpp"

#include <stdexcept>

#include "decindex/counting.hpp"
#include "decindex/errors.hpp"

namespace decindex {

namespace {

const Natural kOne{1};
const Natural kTwo{2};
const Natural kNine{9};
const Natural kTen{10};

void require_level(const Natural& level, const CanonicalTuple& t) {
    if (complexity(t) != level) {
        throw std::invalid_argument("tuple " + to_string(t) + " does not have complexity " + level.to_string());
    }
}

// Fractional compositions at this level: K(K+1)/2.
Natural fractional_total(const Natural& level) { return level * (level + kOne) / kTwo; }

// Fractional compositions with n1 < row: row*K - row(row-1)/2.
Natural rows_before(const Natural& level, const Natural& row) {
    return row * (level + level + kOne - row) / kTwo;
}

// Strict-canonical fractional compositions with n1 < row.
Natural strict_rows_before(const Natural& level, const Natural& row) {
    return rows_before(level, row) + excluded_fractional(level - row) - excluded_fractional(level);
}

Natural with_sign(const Natural& base, Sign sign) {
    return base + base + (sign == Sign::negative ? kOne : Natural{});
}

}  // namespace

Natural position_within(const Natural& level, const CanonicalTuple& t) {
    require_valid(t);
    require_level(level, t);
    if (t.n3.is_zero()) return with_sign(fractional_total(level), t.sign);
    return with_sign(rows_before(level, t.n1) + t.n2, t.sign);
}

CanonicalTuple tuple_at(const Natural& level, const Natural& position) {
    if (position >= level_count(level)) {
        throw std::out_of_range("position " + position.to_string() + " outside level " + level.to_string());
    }
    const Sign sign = position.is_odd() ? Sign::negative : Sign::positive;
    const Natural base = position >> 1;
    const Natural fractional = fractional_total(level);
    if (base == fractional) return {sign, level, Natural{}, Natural{}};

    // Largest row with rows_before(row) <= base. rows_before(x) <= base holds
    // for x <= ((2K+1) - sqrt((2K+1)^2 - 8 base)) / 2, so the floor of that
    // root, taken with an integer square root, lands on the row or one past it.
    const Natural width = level + level + kOne;
    const Natural root = floor_sqrt(width * width - Natural{8} * base);
    const Natural guess = (width - root) >> 1;
    const Natural above = guess + kOne;
    const Natural below = guess.is_zero() ? guess : guess - kOne;
    const Natural at_above = rows_before(level, above);
    const Natural at_guess = rows_before(level, guess);
    const Natural at_below = rows_before(level, below);

    Natural row;
    Natural row_start;
    if (above < level && at_above <= base) {
        row = above;
        row_start = at_above;
    } else if (at_guess <= base) {
        row = guess;
        row_start = at_guess;
    } else {
        row = below;
        row_start = at_below;
    }
    if (row_start > base) throw std::logic_error("tuple_at: row search failed");

    Natural n2 = base - row_start;
    const Natural used = row + n2;
    if (used >= level) throw std::logic_error("tuple_at: recovered tuple has no fractional digits");
    Natural n3 = level - used;
    return {sign, row, std::move(n2), std::move(n3)};
}

Natural strict_position_within(const Natural& level, const CanonicalTuple& t) {
    if (!is_strict_canonical(t)) {
        require_valid(t);
        throw CanonicalityError("tuple " + to_string(t) + " has a trailing zero in n3");
    }
    require_level(level, t);
    if (t.n3.is_zero()) return with_sign(fractional_total(level) - excluded_fractional(level), t.sign);
    // Within the row, n3 runs from K - n1 down to 1; the skipped slots above
    // this one are the multiples of ten in (n3, K - n1].
    const Natural remaining = level - t.n1;
    const Natural skipped = remaining / kTen - t.n3 / kTen;
    return with_sign(strict_rows_before(level, t.n1) + t.n2 - skipped, t.sign);
}

CanonicalTuple strict_tuple_at(const Natural& level, const Natural& position) {
    if (position >= strict_level_count(level)) {
        throw std::out_of_range("position " + position.to_string() + " outside strict level " + level.to_string());
    }
    const Sign sign = position.is_odd() ? Sign::negative : Sign::positive;
    const Natural base = position >> 1;
    const Natural fractional = fractional_total(level) - excluded_fractional(level);
    if (base == fractional) return {sign, level, Natural{}, Natural{}};

    // Bisection over rows [0, K-1] for the last row starting at or before base.
    Natural lo;
    Natural hi = level - kOne;
    while (lo < hi) {
        const Natural mid = (lo + hi + kOne) >> 1;
        if (strict_rows_before(level, mid) <= base) {
            lo = mid;
        } else {
            hi = mid - kOne;
        }
    }
    const Natural& row = lo;
    const Natural rank = base - strict_rows_before(level, row);

    // Valid n3 values in [1, m] number m - floor(m/10); the v-th of them is
    // v + floor((v-1)/9). Ranks count down from n3 = m.
    const Natural remaining = level - row;
    const Natural valid = remaining - remaining / kTen;
    const Natural v = valid - rank;
    if (v.is_zero()) throw std::logic_error("strict_tuple_at: rank beyond row");
    Natural n3 = v + (v - kOne) / kNine;
    Natural n2 = remaining - n3;
    return {sign, row, std::move(n2), std::move(n3)};
}

}  // namespace decindex
