#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibseq {

/// Exit codes: 0 success or check true, 1 validation or I/O error, 2 check false.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitFalse = 2 };

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibseq
