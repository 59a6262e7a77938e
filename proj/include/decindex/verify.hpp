#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "decindex/bijection.hpp"

namespace decindex {

struct VerifyOptions {
    std::uint64_t max_index = 1000;
    std::uint64_t max_level = 25;
    Mode mode = Mode::paper;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Oracle-versus-closed-form agreement, round trips, the published reference
/// rows, and the known inconsistencies of the published examples. The
/// inconsistency entries pass when the formulas and the oracle agree with each
/// other; their detail text records what the published value claimed.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace decindex
