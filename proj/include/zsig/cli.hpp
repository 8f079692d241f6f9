#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zsig {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitBudget = 3,
  kExitPreperiodic = 4,
  kExitInconsistent = 5,
};

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsig
