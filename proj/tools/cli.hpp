#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wenger::cli {

enum ExitCode : int { ok = 0, io_failure = 1, config_failure = 2, budget_failure = 3, mismatch = 4 };

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wenger::cli
