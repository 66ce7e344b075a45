#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grassperm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;

// Runs the command line `args` (without the program name), writing to the
// given streams, and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grassperm::cli
