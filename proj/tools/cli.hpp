#pragma once

#include <ostream>

namespace rflight::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `rflight` tool. Commands: density-profile, gcurves,
/// simulate, validate. Results go to `out` (or --output), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rflight::cli
