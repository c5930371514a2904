#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orchard {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFalsified = 1, kExitUsage = 2 };

/// Runs the `orchard` command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orchard
