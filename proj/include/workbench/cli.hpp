#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace workbench {

/// Exit codes: 0 success, 1 input error, 2 budget-truncated result,
/// 64 usage / unknown flag.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitTruncated = 2;
inline constexpr int kExitUsage = 64;

/// Runs one workbench invocation; `args` excludes the program name. Machine
/// output goes to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace workbench
