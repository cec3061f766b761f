#pragma once

#include <ostream>

namespace ringcode::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_parameter = 2,
  exit_precondition = 3,
  exit_mismatch = 4,
  exit_budget = 5,
};

/// Runs one `ringcode` invocation; JSON goes to out, diagnostics and --pretty tables to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ringcode::cli
