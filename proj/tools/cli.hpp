#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slag::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNonConvergence = 2, kCriterionFailure = 3 };

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slag::cli
