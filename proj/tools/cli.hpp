#pragma once

#include <iosfwd>

namespace genocchi::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kInvalidInput = 3,
};

/// Entry point of the `genocchi` command; `in` feeds `map` when no --input
/// is given.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace genocchi::cli
