#pragma once

#include <iosfwd>

namespace idcodes {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification failed, no code exists, retries ran out
inline constexpr int kExitUsage = 2;   // bad arguments, unreadable or malformed input

/// The idcodes command line. Normal output goes to `out`, diagnostics to
/// `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace idcodes
