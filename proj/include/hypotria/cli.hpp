#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hypotria::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,  ///< invalid generators, non-triple input, failed verification
  kUsageError = 2,
};

/// Runs one invocation. `args` excludes the program name. `env_format` is the
/// value of HYPOTRIA_FORMAT, used when --format is not given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_format = std::nullopt);

}  // namespace hypotria::cli
