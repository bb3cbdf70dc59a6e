#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace splitkit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParseFailure = 2, kValidationFailure = 3, kMismatch = 4 };

/// Runs one command line (without the program name). Output goes to `out`
/// unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitkit::cli
