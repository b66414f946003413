#ifndef POINCARE_CLI_HPP
#define POINCARE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace poincare::cli {

enum ExitCode : int {
  kSuccess = 0,
  kArgumentError = 1,
  kVerificationFailure = 2,
  kNumericalFailure = 3,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poincare::cli

#endif  // POINCARE_CLI_HPP
