#pragma once

#include <ostream>

namespace qperm::cli {

// Exit codes.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Parses argv, runs one subcommand and writes the report: text or JSON on
/// `out` per --format, JSON to --output FILE and to $QPERM_REPORT_DIR when
/// set. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qperm::cli
