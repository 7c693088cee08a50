#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bargmann {

/// Exit statuses of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the toeplitz-check command line. args excludes the program name.
/// Returns 0 when every verdict passes, 1 on a failed or inconclusive verdict (or a
/// computation error), 2 on usage or symbol parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace bargmann
