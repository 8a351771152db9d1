#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace domset::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kBudgetExceeded = 3,
};

/// Runs one `domset` invocation. `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace domset::cli
