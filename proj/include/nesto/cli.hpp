#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nesto {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitCapacity = 3,
};

/// Runs one command line (without the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nesto
