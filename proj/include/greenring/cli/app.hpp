#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greenring::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

/// Runs the tool on `args` (program name excluded), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace greenring::cli
