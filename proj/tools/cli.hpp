#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpv::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_error = 2;
inline constexpr int exit_budget = 3;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpv::cli
