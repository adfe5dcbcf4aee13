#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snla::cli {

/// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad input.
enum ExitCode : int { ok = 0, math_failure = 1, input_error = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snla::cli
