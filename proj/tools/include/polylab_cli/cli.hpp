#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polylab::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name. `env_seed`
/// stands in for the POLYLAB_SEED environment variable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed = std::nullopt);

}  // namespace polylab::cli
