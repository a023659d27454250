#pragma once

#include <ostream>

namespace viewhedge::cli {

/// Exit codes: 0 success, 1 invalid input or config, 2 runtime failure.
enum ExitCode : int { kOk = 0, kValidationError = 1, kRuntimeError = 2 };

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace viewhedge::cli
