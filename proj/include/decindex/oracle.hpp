#pragma once

#include <cstdint>
#include <deque>
#include <optional>

#include "decindex/bijection.hpp"
#include "decindex/decimal.hpp"

namespace decindex::oracle {

// Brute-force reference enumeration. Everything here is plain nested loops
// over machine integers; no counting formula is used, so agreement with the
// closed forms is independent evidence.

struct OracleConfig {
    std::uint64_t max_level = 25;
    Mode mode = Mode::paper;
};

/// Emits tuples level by level: within level K, n1 ascending, then n2
/// ascending with n3 = K - n1 - n2 >= 1, then (K, 0, 0); each composition
/// positive first, then negative. Strict mode skips n3 that are multiples of 10.
class OracleStream {
public:
    explicit OracleStream(OracleConfig cfg) : cfg_(cfg) {}

    std::optional<CanonicalTuple> next();
    /// Level of the tuple most recently returned by next().
    std::uint64_t current_level() const { return emitted_level_; }

private:
    void fill_level(std::uint64_t level);

    OracleConfig cfg_;
    std::uint64_t next_level_ = 0;
    std::uint64_t emitted_level_ = 0;
    std::deque<std::pair<std::uint64_t, CanonicalTuple>> pending_;
};

/// One-based position of t in OracleStream(cfg). Throws std::out_of_range if
/// complexity(t) > cfg.max_level or the tuple never appears.
Natural oracle_index_of(const CanonicalTuple& t, OracleConfig cfg);

}  // namespace decindex::oracle
