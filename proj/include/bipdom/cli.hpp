#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipdom::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Runs one invocation. `args` excludes the program name. Diagnostics go
/// to `err` prefixed with `error:`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace bipdom::cli
