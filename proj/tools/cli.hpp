#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slcs::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kInvariantFailure = 3,
  kOracleMismatch = 4,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slcs::cli
