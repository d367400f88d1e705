#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wdeg {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFailure = 1,
  kExitInputError = 2,
  kExitCapacityError = 3,
};

/// Runs the tool on `args` (without the program name).  The JSON report
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdeg
