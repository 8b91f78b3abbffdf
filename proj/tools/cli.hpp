#pragma once

#include <string>
#include <vector>

namespace realfill::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kBadInput = 2,
  kPrecondition = 3,
  kInconclusive = 4,
};

struct Result {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one invocation. args excludes the program name. Never throws.
Result run(const std::vector<std::string>& args);

std::string usage();

}  // namespace realfill::cli
