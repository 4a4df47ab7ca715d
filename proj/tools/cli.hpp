#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wrd::cli {

enum ExitCode : int {
  ok = 0,
  usage = 1,
  parse_error = 2,
  size_guard = 3,
  theorem_violation = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wrd::cli
