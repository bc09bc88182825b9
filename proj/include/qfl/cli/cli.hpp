#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfl::cli {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kInputError = 2 };

/// Runs one command line (without the program name). Reports go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfl::cli
