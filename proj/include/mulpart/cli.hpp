#ifndef MULPART_CLI_HPP
#define MULPART_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mulpart::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMismatch = 2,
  kInternal = 3,
};

/// Runs the `mulpart` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mulpart::cli

#endif  // MULPART_CLI_HPP
