#pragma once

#include <string>
#include <vector>

namespace salience {

/// Output of one CLI invocation. Exit code 0 on success (a false verdict is
/// still success), 1 on data errors, 2 on usage errors.
struct Report {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// `args` excludes the program name.
Report run_command(const std::vector<std::string>& args);

}  // namespace salience
