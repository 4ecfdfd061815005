#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace heegaard {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitInput = 2,
};

/// Runs the command line `args` (without the program name). Everything the
/// command prints goes to `out` / `err`; the return value is the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace heegaard
