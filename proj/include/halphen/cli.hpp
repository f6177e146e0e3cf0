#ifndef HALPHEN_CLI_HPP
#define HALPHEN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace halphen::cli {

enum ExitCode : int {
  ok = 0,
  residual_over_tolerance = 1,
  usage_error = 2,
  numeric_failure = 3,
};

/// Runs one command. `args` excludes the program name. The report goes to
/// `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halphen::cli

#endif  // HALPHEN_CLI_HPP
