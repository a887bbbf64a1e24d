#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricsheaf::cli {

enum ExitCode : int { Ok = 0, Invalid = 1, Unsupported = 2, Inconsistent = 3 };

// Runs one command line (args excludes the program name) and returns the exit
// code. Results go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricsheaf::cli
