#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

/// Exit statuses: affirmative verdict, negative verdict, input or usage error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs one toric-check invocation. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
