#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz::cli {

/// Parses `args` (without the program name), dispatches, and writes reports
/// to `out` and diagnostics to `err`. Returns the process exit status:
/// 0 success, 1 failed checks or strict-mode outcomes, 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
