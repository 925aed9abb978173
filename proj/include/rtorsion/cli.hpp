#pragma once

#include <ostream>
#include <stdexcept>

namespace rtorsion {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitPrecondition = 2, kExitCrossCheck = 3 };

/// Two independent computations of the same quantity disagree.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs one command (argv[0] is the program name) and returns its exit code.
/// Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rtorsion
