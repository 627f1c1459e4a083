#pragma once

#include <string>
#include <vector>

namespace eun::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kNumeric = 3,
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// Runs one subcommand. `args` excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace eun::cli
