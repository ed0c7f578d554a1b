#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pkcolor::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kUsage = 1, kTimeout = 2, kFailed = 3 };

/// Runs one command line (without the program name).  JSON goes to out,
/// ASCII grids and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pkcolor::cli
