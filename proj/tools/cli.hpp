#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace landau::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Never calls exit().
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// "a:b:s" -> a, a+s, ..., up to b inclusive; "x,y,z" -> the list.
std::vector<double> parse_values(const std::string& text, bool allow_range);

}  // namespace landau::cli
