#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decindex::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 2,
    kCanonicalityError = 3,
    kRenderBudget = 4,
    kVerificationFailure = 5,
};

/// Runs the command line `args` (without the program name). Reads batch input
/// from `in` unless --in is given; writes to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace decindex::cli
