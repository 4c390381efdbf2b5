#pragma once

#include <ostream>

namespace sharp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the default working precision.
inline constexpr const char* kDigitsEnv = "SHARPC_DIGITS";

/// Entry point of the sharpc tool. Results go to `out` (or --out PATH),
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sharp
