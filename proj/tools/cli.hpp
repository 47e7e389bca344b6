#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hurwitz::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs one invocation. args excludes the program name. JSON results go to
/// out; usage text and diagnostics go to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
