#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fftfilt::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,   // bad flags, unreadable or malformed input
    kDomainError = 3,  // empty passband, off-grid point frequency
};

/// Runs the command line `args` (args[0] is the program name) and returns the exit code.
/// Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fftfilt::cli
