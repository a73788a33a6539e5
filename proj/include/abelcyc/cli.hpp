#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace abelcyc {

// Exit statuses shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verdict_false = 1;
inline constexpr int exit_usage = 2;

/// Runs the command line (args exclude the program name) and returns the
/// exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelcyc
