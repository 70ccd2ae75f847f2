#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resq {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitPropertyFailure = 1,
    kExitInputError = 2,
    kExitDisagreement = 3,
};

/// Runs the command line (args excludes the program name) writing the report
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resq
