#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apportion {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,      // bad flags, unparsable method or tie policy
  kExitInput = 2,      // unreadable or invalid input data
  kExitMismatch = 3,   // scenario or verification mismatch
  kExitTie = 4,        // a tie under the error policy
};

/// Runs the `apportion` tool on `args` (without the program name). Reports go to `out`
/// unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apportion
