#pragma once

#include <iosfwd>

namespace paprlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the paprlab binary; writes data and help to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Invariant smoke suite behind `paprlab selftest`. Prints one PASS/FAIL line per check.
bool run_selftest(std::ostream& out);

}  // namespace paprlab::cli
