#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzylad::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kValidationError = 2,
    kSolverError = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzylad::cli
