#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace induction::cli {

enum ExitCode : int { kSuccess = 0, kRuntimeError = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics and usage text to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace induction::cli
