#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cobord::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kConstraintViolation = 2,
};

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cobord::cli
