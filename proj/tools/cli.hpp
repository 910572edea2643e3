#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wreath::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kBudget = 2;
inline constexpr int kVerifyFailed = 3;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreath::cli
