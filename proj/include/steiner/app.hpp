#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steiner::app {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kPreconditionViolation = 2,
  kVerificationMismatch = 3,
};

/// Runs the `steiner` command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steiner::app
