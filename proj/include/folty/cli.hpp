#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folty {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitOracleCeiling = 3,
};

/// Entire command-line front end; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folty
