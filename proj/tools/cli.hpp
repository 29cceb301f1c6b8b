#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rpr3::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,         ///< bad flags, malformed input, schema or geometry errors
  kSingularLeg = 3,
  kNonConvergence = 4,
};

/// Runs one command line (without the program name). Data goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpr3::cli
