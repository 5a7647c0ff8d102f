// Command-line front end. The whole surface lives behind run_command so the
// binary stays a thin wrapper and tests can drive commands in-process.
//
// Exit codes: 0 affirmative/success, 1 negative with witness, 2 budget
// exceeded, 3 usage or parse error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pratt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 3;

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace pratt
