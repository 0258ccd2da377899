#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xcl::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kTooLarge = 3,
};

/// Runs one command; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace xcl::cli
