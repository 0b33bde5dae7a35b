#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wm::cli {

struct RunConfig {
  std::string command;  ///< "validate", "awfs check", ...
  std::vector<std::string> inputs;
  std::size_t finset_max = 0;  ///< 0: the subcommand default
  std::size_t bound = 0;       ///< span apex bound, 0 means |QA| + 2
  std::size_t zigzag = 4;
  std::size_t trunc = 0;  ///< 0: the subcommand default
  std::string format = "text";
  std::uint64_t seed = 0;
};

/// Parses `args` (without the program name), runs the subcommand and writes
/// the report to `out`.  Returns 0 when the report has no FAIL line, 1 when it
/// has one and 2 on a usage or input error, in which case nothing is written
/// to `out` and the message goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wm::cli
