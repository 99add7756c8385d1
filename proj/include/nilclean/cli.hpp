#pragma once

#include <istream>
#include <ostream>

namespace nilclean::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,   // verify FAIL, not strongly nil-clean, non-2-group verdict
  kMalformed = 2,  // unreadable or ill-typed input, bad arguments
  kInternal = 3,   // a constructed certificate failed self-verification
};

/// Runs one command. Input files named on the command line are opened
/// directly; a missing path or "-" reads `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nilclean::cli
