#pragma once

// The qsh command line, callable in-process for tests.

#include <ostream>
#include <string>
#include <vector>

namespace qsh::cli {

enum ExitCode : int {
  kSuccess = 0,
  kAssertionFailed = 1,
  kUsage = 2,
  kDomain = 3,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SplitArgs {
  /// Subcommand path and options, with option values joined as --opt=value.
  std::vector<std::string> command;
  /// Literals such as "[1,2]" or "-1/2*[1]", in order.
  std::vector<std::string> positional;
};

/// Separates positionals from subcommands and options.
SplitArgs split_args(const std::vector<std::string>& args);

}  // namespace qsh::cli
