#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nonreg::cli {

// Exit codes of `run`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_device = 2;
inline constexpr int exit_counterexample = 3;

/// Runs one command; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nonreg::cli
