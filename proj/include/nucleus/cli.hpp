#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nucleus {

/// Exit statuses of the `nucleus` command.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitCache = 3,
};

/// Entry point of the `nucleus` command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nucleus
