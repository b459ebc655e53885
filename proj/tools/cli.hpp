#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netwave::cli {

/// Exit codes: 0 success, 1 a check or invariant failed, 2 bad usage or input.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one subcommand; `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netwave::cli
