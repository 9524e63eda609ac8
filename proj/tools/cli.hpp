#pragma once

#include <ostream>

namespace houghton::cli {

/// Exit codes of the houghton tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kUnsupported = 3,
  kOverBudget = 4,
};

/// Runs the command line tool with the given arguments, writing to out/err
/// instead of the process streams. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace houghton::cli
