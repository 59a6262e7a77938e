#pragma once

#include "decindex/natural.hpp"

namespace decindex {

// Closed-form level sizes for the complexity ordering. "Paper" counts cover
// every composition with n3 >= 1 plus the pure integer; "strict" counts drop
// compositions whose n3 is a positive multiple of ten.

/// Tuples at complexity level K: 1 for K = 0, else K(K+1) + 2.
Natural level_count(const Natural& level);
/// Tuples at levels < K.
Natural cumulative_before(const Natural& level);
/// Tuples at levels <= K.
Natural cumulative_upto(const Natural& level);
/// The K with cumulative_before(K) < index <= cumulative_upto(K).
/// Throws std::domain_error for index 0.
Natural level_of_index(const Natural& index);

/// sum_{m=1..x} floor(m / 10): excluded (trailing-zero) fractional slots at
/// level x, counted once per sign.
Natural excluded_fractional(const Natural& x);

Natural strict_level_count(const Natural& level);
Natural strict_cumulative_before(const Natural& level);
Natural strict_cumulative_upto(const Natural& level);
Natural strict_level_of_index(const Natural& index);

}  // namespace decindex
