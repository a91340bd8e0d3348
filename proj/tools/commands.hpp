// The surfemb command line, callable in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfemb::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// Runs the command line described by args (args[0] is the program name).
/// Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfemb::cli
