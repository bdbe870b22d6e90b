#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lange::cli {

/// Runs one CLI invocation. `args` excludes the program name.
/// Returns 0 on success, 2 on invalid arguments (one line on `err`), 1 if an
/// internal invariant fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lange::cli
