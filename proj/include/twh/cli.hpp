#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twh {

// Exit codes of run_cli.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitValidation = 2, kExitComputation = 3 };

// args excludes the program name. Results go to out; errors go to err as a JSON object
// {"error": kind, "message": text}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twh
