#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexstore::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,      // I/O and unexpected errors
  kUsage = 2,        // bad arguments, malformed or invalid input files
  kInconsistent = 3, // topology faults and inconsistent geometry
  kInfeasible = 4,   // configuration cannot be loaded
  kSizeGuard = 5,    // search space above the mode's limit
};

/// Runs the command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexstore::cli
