#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exchange::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,    ///< success, or the checked condition holds
  kViolation = 1,  ///< violation or failure certificate produced
  kUsage = 2,      ///< usage, input, or scale error
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exchange::cli
