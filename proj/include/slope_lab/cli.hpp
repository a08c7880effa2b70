#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slope_lab {

/// Exit codes: 0 computed or holds, 2 an evaluated inequality fails, 1 anything else.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFails = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace slope_lab
