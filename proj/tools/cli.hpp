#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace planepart::cli {

// Exit statuses are a stable scripting contract.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kResourceCeiling = 3,
  kNumeric = 4,
};

/// Runs `planepart <count|estimate|zn|gen|table1> [flags]`. `args` excludes
/// the program name. `env_cache` is the value of PLANEPART_CACHE, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_cache = std::nullopt);

}  // namespace planepart::cli
