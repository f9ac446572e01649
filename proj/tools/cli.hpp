#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hz::cli {

/// Exit statuses of the hzcodes tool.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kVerificationFailed = 3,
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hz::cli
