#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xprod::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kUnexpectedVerdict = 1,
  kUsage = 2,
};

/// Runs one invocation.  `args` excludes the program name.  Normal output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xprod::cli
