#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace achiral::cli {

enum ExitCode : int { kOk = 0, kInfeasible = 1, kInvalidInput = 2 };

// Runs one command line (without the program name). Payloads go to out,
// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace achiral::cli
