#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cka::cli {

enum ExitCode : int {
  kEqual = 0,
  kOk = 0,
  kNotEqual = 1,
  kUsage = 2,
  kResourceLimit = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cka::cli
