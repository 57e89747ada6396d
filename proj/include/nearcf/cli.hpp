#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nearcf {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,
  kExitUsage = 2,
  kExitInvariant = 3,
};

// Runs one `nearcf` invocation. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nearcf
