#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lotto::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,        // success, design valid
  kNegative = 1,  // invalid design, construction failed, target unreached
  kUsage = 2,     // bad arguments, unreadable or malformed input
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lotto::cli
