#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgrough::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kViolation = 2,
  kSizeLimit = 3,
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgrough::cli
