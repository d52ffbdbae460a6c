#pragma once

// Command-line front end. `run` parses arguments (without the program name),
// writes results to `out` and diagnostics to `err`, and returns the exit code:
// 0 on success, 1 when a check fails, 2 on a usage error.

#include <ostream>
#include <string>
#include <vector>

namespace strandbox {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace strandbox
