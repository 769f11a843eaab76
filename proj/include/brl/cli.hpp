#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brl {

/// Command line entry point, callable in-process for testing. `args` is
/// everything after the program name. Returns the process exit code:
/// 0 success, 1 a checked property fails or a counterexample was found,
/// 2 unusable input (bad flags, unreadable files, parse errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brl
