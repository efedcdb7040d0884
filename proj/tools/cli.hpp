#pragma once

#include <iosfwd>

namespace epw::cli {

// Exit codes of the front end.
inline constexpr int kExitSuccess = 0;     // holds / success
inline constexpr int kExitRefuted = 1;     // refuted, witness written
inline constexpr int kExitBudget = 2;      // budget exhausted
inline constexpr int kExitUsage = 64;      // bad command line
inline constexpr int kExitDataError = 65;  // malformed or inconsistent input
inline constexpr int kExitNoInput = 66;    // unreadable input file
inline constexpr int kExitCantCreate = 73; // witness or output file not writable

/// Runs one invocation; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace epw::cli
