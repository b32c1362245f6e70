#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newton_sobolev::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kAssumption = 3,
  kUndetermined = 4,
  kVerificationFailed = 5,
};

// args excludes the program name. stdout receives only the requested
// artifact; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace newton_sobolev::cli
