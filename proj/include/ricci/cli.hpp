#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ricci {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,       ///< malformed input file or command line
  kExitValidation = 2,  ///< invalid graph, unknown vertex or type tag, out-of-domain request
  kExitNumeric = 3,     ///< solver failure or failed internal cross-check
  kExitVerify = 4,      ///< a verification suite failed
};

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ricci
