#pragma once

// Command-line front end. Standard output is assembled in full before it is
// written, so a failing invocation (exit 2) leaves it untouched.

#include <ostream>
#include <string>
#include <vector>

namespace kronlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kronlab
