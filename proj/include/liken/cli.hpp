#pragma once

#include <iosfwd>

namespace liken {

/// Exit codes of the liken tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line. Reports go to `out` (or to files), errors to `err`
/// as one JSON object {"error": code, "message": text}.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liken
