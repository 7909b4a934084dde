#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zagreb {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitMismatch = 3;

/// Runs one CLI invocation. args excludes the program name. The worker
/// count comes from --threads, else from ZAGREB_THREADS, else 1.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zagreb
