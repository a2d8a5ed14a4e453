#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gww {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  /// --check mismatch, or not isotopic.
  kExitNegative = 1,
  kExitParse = 2,
  /// Input parsed but the mathematical preconditions fail.
  kExitInvalid = 3,
};

/// Runs one gw-writhe command. args excludes the program name. Results go to
/// out as JSON; usage text and diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::uint64_t seed);

/// Seed from GW_WRITHE_SEED, or the library default when unset. Throws
/// ParseError on a malformed value.
std::uint64_t seed_from_environment();

}  // namespace gww
