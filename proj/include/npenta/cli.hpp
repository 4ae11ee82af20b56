#pragma once

#include <iosfwd>

namespace npenta::cli {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadInput = 2,
  kZeroPivot = 3,
  kSingular = 4,
};

/// Entry point of the `npenta` tool with injectable streams. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace npenta::cli
