#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dwmds/oracle.hpp"

namespace dwmds::cli {

enum ExitStatus : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one command line (args[0] is the program name). Output goes to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit status for a finished verification run.
int verification_status(const VerificationReport& report);

}  // namespace dwmds::cli
