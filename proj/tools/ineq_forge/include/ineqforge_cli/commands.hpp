#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ineqforge::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitUsage = 1,
  kExitViolation = 2,
  kExitFinding = 3,
};

/// Runs one command line (program name excluded). JSON lines go to `out`
/// (or to --out / --csv files), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ineqforge::cli
