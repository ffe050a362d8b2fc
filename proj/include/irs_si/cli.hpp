#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irs_si {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitInfeasible = 2, kExitSolver = 3 };

/// Runs the irs-region command line; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irs_si
