#pragma once

#include "decindex/decimal.hpp"
#include "decindex/natural.hpp"

namespace decindex {

/// Complexity level K and zero-based rank within it.
struct LevelPosition {
    Natural level;
    Natural position;
    friend bool operator==(const LevelPosition&, const LevelPosition&) = default;
};

/// Within a level, tuples are ordered by (n1, n2) ascending, fractional
/// tuples before the pure integer (K, 0, 0), and each composition appears
/// positive then negative. So the rank is even exactly for positive tuples.
///
/// Throws std::invalid_argument if complexity(t) != level, CanonicalityError
/// for invalid tuples.
Natural position_within(const Natural& level, const CanonicalTuple& t);

/// Inverse of position_within. Throws std::out_of_range when
/// position >= level_count(level).
CanonicalTuple tuple_at(const Natural& level, const Natural& position);

/// Same ordering restricted to strict-canonical tuples. strict_position_within
/// rejects tuples whose n3 has a trailing zero with CanonicalityError.
Natural strict_position_within(const Natural& level, const CanonicalTuple& t);
CanonicalTuple strict_tuple_at(const Natural& level, const Natural& position);

}  // namespace decindex
