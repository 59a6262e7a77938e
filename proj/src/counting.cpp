#include "decindex/counting.hpp"

#include <array>
#include <stdexcept>

namespace decindex {

namespace {

const Natural kOne{1};
const Natural kTwo{2};
const Natural kThree{3};
const Natural kFive{5};
const Natural kTen{10};

// sum_{j=1..q} (x - 10j)(x - 10j + 1) / 2 with q = floor((x - 1) / 10):
// excluded slots, per sign, over all levels below x.
Natural excluded_before(const Natural& level) {
    if (level.is_zero()) return Natural{};
    const Natural q = (level - kOne) / kTen;
    if (q.is_zero()) return Natural{};
    const Natural q_q1 = q * (q + kOne);
    const Natural sum_x = q * level - kFive * q_q1;
    const Natural sum_x2 =
        q * level * level + Natural{50} * (q_q1 * (q + q + kOne) / kThree) - kTen * level * q_q1;
    return (sum_x2 + sum_x) / kTwo;
}

}  // namespace

Natural level_count(const Natural& level) {
    if (level.is_zero()) return kOne;
    return level * (level + kOne) + kTwo;
}

Natural cumulative_before(const Natural& level) {
    if (level.is_zero()) return Natural{};
    const Natural km1 = level - kOne;
    return km1 * level * (level + kOne) / kThree + km1 + km1 + kOne;
}

Natural cumulative_upto(const Natural& level) {
    return level * (level + kOne) * (level + kTwo) / kThree + level + level + kOne;
}

Natural level_of_index(const Natural& index) {
    if (index.is_zero()) throw std::domain_error("index must be at least 1");
    if (index == kOne) return Natural{};
    // 3 * cumulative_before(K) = K^3 + 5K - 3, so the level is floor(cbrt(3(n-1)))
    // or one less. Both candidates are checked, always, against the defining
    // inequality.
    const Natural root = floor_cbrt(kThree * (index - kOne));
    const Natural lower = root - kOne;
    const std::array<Natural, 3> bounds{cumulative_before(lower), cumulative_before(root),
                                        cumulative_before(root + kOne)};
    if (bounds[0] < index && index <= bounds[1]) return lower;
    if (bounds[1] < index && index <= bounds[2]) return root;
    throw std::logic_error("level_of_index: no candidate satisfies the level bounds for " + index.to_string());
}

Natural excluded_fractional(const Natural& x) {
    const Natural q = x / kTen;
    return q * (x + kOne) - kFive * q * (q + kOne);
}

Natural strict_level_count(const Natural& level) {
    if (level.is_zero()) return kOne;
    const Natural e = excluded_fractional(level);
    return level_count(level) - (e + e);
}

Natural strict_cumulative_before(const Natural& level) {
    const Natural x = excluded_before(level);
    return cumulative_before(level) - (x + x);
}

Natural strict_cumulative_upto(const Natural& level) { return strict_cumulative_before(level + kOne); }

Natural strict_level_of_index(const Natural& index) {
    if (index.is_zero()) throw std::domain_error("index must be at least 1");
    if (index == kOne) return Natural{};
    // Strict cumulative counts grow as 3K^3/10; seed from that and walk to the
    // exact level. The walk is a handful of steps at any magnitude.
    Natural level = floor_cbrt(Natural{10} * (index - kOne) / kThree);
    while (!level.is_zero() && strict_cumulative_before(level) >= index) level -= kOne;
    while (strict_cumulative_before(level + kOne) < index) level += kOne;
    return level;
}

}  // namespace decindex
