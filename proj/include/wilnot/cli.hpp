#pragma once

#include <iosfwd>

namespace wilnot::cli {

/// Exit codes: 0 success or pass, 1 verification failure, 2 usage or
/// precondition error.
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Entry point for the `wilnot` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wilnot::cli
