#pragma once

#include <ostream>

namespace lattice::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kDegenerate = 2,
  kParseError = 3,
  kCounterexample = 4,
  kIoError = 5,
  kOverflow = 6,
};

/// Entry point of the `lattri` tool; writes reports to `out` (unless --out
/// redirects them) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lattice::cli
