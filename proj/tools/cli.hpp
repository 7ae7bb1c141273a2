#ifndef ZCACS_TOOLS_CLI_HPP
#define ZCACS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zcacs::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kConfigError = 2,
  kIoError = 3,
  kCorruptInput = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zcacs::cli

#endif
