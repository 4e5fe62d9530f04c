#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilbc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,   // bad flags, unreadable input, parse errors
  kInvalid = 2,      // well-formed input that fails validation
  kMismatch = 3,     // golden or expectation mismatch
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilbc::cli
