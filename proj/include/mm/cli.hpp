#pragma once

#include <string>
#include <vector>

namespace mm::cli {

/// Exit codes: 0 ok, 2 infeasible, 3 unsupported regime, 4 search/enumeration
/// guard exceeded, 1 any other error (usage, parse, validation).
struct CommandResult {
  int exitCode = 0;
  std::string out;  // JSON payload (single line) on success
  std::string err;  // human-readable diagnostics
};

CommandResult runCommand(const std::vector<std::string>& args);

}  // namespace mm::cli
