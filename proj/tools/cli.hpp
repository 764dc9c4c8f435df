#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cesaro::cli {

enum ExitCode : int { kOk = 0, kScenarioFailed = 1, kUsage = 2, kNumeric = 3 };

/// Runs the command line in args (without the program name). JSON and CSV go
/// to out unless --out is given; diagnostics go to err.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cesaro::cli
