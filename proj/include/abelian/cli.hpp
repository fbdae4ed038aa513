#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abelian::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNotIsomorphic = 1,
  kParseError = 2,
  kCapExceeded = 3,
  kMembershipError = 4,
  kInternalError = 70,
};

/// Runs one command (args exclude the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelian::cli
