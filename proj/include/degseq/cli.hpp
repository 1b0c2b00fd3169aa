#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degseq {

// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolations = 1,
    kExitParse = 2,
    kExitResource = 3,
    kExitInfeasible = 4,
    kExitInternal = 5,
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace degseq
