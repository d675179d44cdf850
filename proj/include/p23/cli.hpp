#pragma once

// Command-line front end. Exit codes: 0 every verdict passed, 1 a
// mathematical verdict failed, 2 usage, input or output error.

#include <ostream>
#include <string>
#include <vector>

namespace p23 {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace p23
