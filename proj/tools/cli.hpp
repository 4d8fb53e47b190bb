#pragma once
// Command-line front end. run_cli is the whole program minus process
// plumbing, so fixtures and tests can drive it in-process.

#include <ostream>
#include <string>
#include <vector>

namespace klr::cli {

enum ExitCode : int { Ok = 0, VerificationFailure = 1, UsageError = 2, Inconsistency = 3 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klr::cli
