#pragma once

#include <string>
#include <vector>

namespace symm::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). Exit code 0 on success,
/// 1 on a domain error (structured error record on `out`), 2 on a usage error.
RunResult run(const std::vector<std::string>& args);

}  // namespace symm::cli
