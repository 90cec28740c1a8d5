#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace localcop {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoConvergence = 3;

/// Runs the command line `args` (without the program name): one of the
/// subcommands simulate, fit, select or tau. Results go to files or `out`,
/// diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "lo:hi:step" or "lo,hi,step" into lo + k step for
/// k = 0 .. round((hi - lo) / step). Throws ConfigError.
std::vector<double> parse_grid(const std::string& text);

}  // namespace localcop
