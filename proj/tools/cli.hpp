#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dualramsey::cli {

enum ExitCode : int {
    ok = 0,
    input_error = 1,
    guard_exceeded = 2,
    counterexample = 10,
};

/// Runs one command line (without the program name). Machine-readable results go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dualramsey::cli
