#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace copc {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitDiscrepancy = 3,
};

/// Runs the command-line interface; `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copc
