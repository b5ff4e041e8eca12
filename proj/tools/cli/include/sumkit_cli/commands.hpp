#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sumkit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitConjectureFinding = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` (or the --out file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumkit::cli
