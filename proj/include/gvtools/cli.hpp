#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gvt::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       ///< verification mismatch or unexpected error
  kConfigError = 2,   ///< parse, flag or header problems
  kValidityError = 3, ///< a truncation budget ran out
  kStrictError = 4,   ///< --strict and a non-integral invariant
};

/// Runs one command. `args` excludes the program name. "-" paths use `in` / `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gvt::cli
