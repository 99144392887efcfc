#pragma once

#include <iosfwd>

namespace foldweyl {

// Exit codes of the tool.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kTableGap = 3, kResourceLimit = 4 };

// Runs one command line.  Tuple input is read from `in` unless --input or
// --tuple is given; JSON goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace foldweyl
