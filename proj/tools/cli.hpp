#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p1::cli {

/// Exit codes of p1audit.
enum Exit : int {
  kOk = 0,
  kFail = 1,          // an audit entry failed
  kInconclusive = 2,  // a general choice was never found
  kInputError = 65,   // an expression did not parse or evaluate
  kUsage = 64,
};

/// Runs p1audit on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace p1::cli
