#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framechoice::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageOrDataError = 1;
inline constexpr int kRejected = 2;

// Runs one command line (args[0] is the program name). Reports go to `out`
// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framechoice::cli
