#pragma once

#include <ostream>

namespace berge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // counterexample, failed claim, no cycle
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Parses argv and runs one subcommand. Reports go to `out`, diagnostics to
/// `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace berge::cli
