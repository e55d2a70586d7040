#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace garside::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotConjugate = 1,
  kUsageError = 2,
  kInternalError = 3,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace garside::cli
