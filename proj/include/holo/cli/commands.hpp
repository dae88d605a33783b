#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "holo/errors.hpp"

namespace holo::cli {

/// Exit codes of the holobrane tool.
enum ExitCode : int {
    kOk = 0,
    kIdentityFailure = 1,
    kParseError = 2,
    kNumericalFailure = 3,
    kObstruction = 4,
};

/// Parse and validation errors map to 2; RankJump, DegreeOverflow and
/// ToleranceUnreachable map to 3.
int exit_code_for(const Error& e);

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace holo::cli
