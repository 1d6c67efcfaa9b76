#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace valiant {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,        // success, or "yes"
  kExitNegative = 1,  // well-formed input, negative answer
  kExitInputError = 2,
};

/// Runs the command line `args` (without the program name) and returns
/// the process exit code. Subcommands: recognize, parse, closure,
/// check-laws, bench.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace valiant
