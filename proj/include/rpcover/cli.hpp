#pragma once

#include <iosfwd>

namespace rpcover {

/// Process exit codes for the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidCover = 1,
    kExitUsage = 2,
    kExitBudget = 3,
};

/// Entry point of the `rpcover` tool; output goes to the given streams so
/// tests can drive it in-process.
int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

} // namespace rpcover
