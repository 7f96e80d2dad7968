#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadfact::cli {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitViolation = 3;

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 2 on bad input, 3 when a mathematical check fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadfact::cli
