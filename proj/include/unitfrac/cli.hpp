#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unitfrac::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kUnsolved = 4,
};

/// Parses `args` (without the program name), runs the subcommand and writes
/// the report to `out` (or to --output). Diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitfrac::cli
