#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace knotpoly::cli {

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitContradiction = 3;  // a sweep record broke its expectation

/// Runs one invocation. `args` excludes the program name. `env_format` plays
/// the role of KNOTPOLY_FORMAT (text or json).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_format);

/// Same, reading KNOTPOLY_FORMAT from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotpoly::cli
