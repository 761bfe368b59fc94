#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphdiv::cli {

/// Exit codes: 0 success or property holds, 1 well-formed negative answer,
/// 2 usage or input error (one-line diagnostic on err).
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphdiv::cli
