// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bures/vec3.hpp"

namespace bures::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,  // route disagreement or sweep above tolerance
  kUsage = 2,
};

/// Route disagreement that `fidelity` reports as a failure.
inline constexpr double kTheoremViolation = 1e-8;

/// Parses "x,y,z" into three finite reals.
std::optional<Vec3> parse_triple(std::string_view text);

/// Runs one command. `args` excludes the program name. The JSON envelope or
/// CSV goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bures::cli
