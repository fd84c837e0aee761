#pragma once

#include <ostream>

namespace bnf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsageError = 2,
  kInputError = 3,
  kCapExceeded = 4,
};

/// Runs the bnfourier command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bnf::cli
