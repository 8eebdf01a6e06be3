#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace foliate::cli {

/// Exit codes: 0 success or pass, 1 check failed, 2 usage or input error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// Runs one subcommand; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Value rounded to 15 significant digits.
double round15(double v);
std::string format_double(double v);

}  // namespace foliate::cli
