#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trsmlab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidShape = 2,
  kOverDecomposed = 3,
  kVerifyFailed = 4,
};

/// Runs the trsm-lab command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trsmlab::cli
