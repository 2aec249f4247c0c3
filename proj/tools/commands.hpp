#pragma once

// Command-line front end: verify, enumerate and coeff.

#include <ostream>
#include <string>
#include <vector>

namespace tokuyama::tool {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// Runs one command line given without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tokuyama::tool
