#ifndef BLAKLEY_TOOLS_COMMANDS_HPP
#define BLAKLEY_TOOLS_COMMANDS_HPP

#include <iosfwd>

namespace blakley::tools {

/// Process exit statuses of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsage = 2,  // bad arguments, bad share files, inconsistent share sets
  kAdmissibilityExhausted = 3,
  kSingularShares = 4,
  kEnumerationTooLarge = 5,
};

/// Runs one `blakley` invocation. Normal output goes to `out`, diagnostics to
/// `err`; secrets are only ever written to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace blakley::tools

#endif  // BLAKLEY_TOOLS_COMMANDS_HPP
