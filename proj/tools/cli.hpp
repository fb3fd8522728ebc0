#pragma once

#include <iosfwd>

namespace nilclean::cli {

/// Exit codes. JSON output and these codes are the stable surface.
enum Exit : int {
  kOk = 0,
  kFalse = 1,
  kUsage = 2,
  kCap = 3,
  kCounterexample = 4,
  kAxiom = 5,
};

/// Runs the command line against the given streams and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilclean::cli
