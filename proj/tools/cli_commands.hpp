#pragma once

#include <iosfwd>

namespace urns::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonTerminating = 3;

// Parses argv and runs one subcommand (solve, formula, simulate, limit-check).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace urns::cli
