#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kfib {

/// Runs one CLI invocation (args exclude the program name) and returns the
/// process exit status: 0 success, 1 verification failure, 2 usage error,
/// 3 internal consistency failure. main() forwards here; tests call it
/// in-process.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kfib
