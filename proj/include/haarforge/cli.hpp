#pragma once

#include <iosfwd>

namespace haarforge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // iso mismatch, failed verification
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Subcommands: construct, analyze, iso, delta, verify-theorems, census.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace haarforge
