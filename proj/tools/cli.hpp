#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace czcp::cli {

// Exit codes: 0 success / positive verdict, 1 negative verdict or rejected
// construction, 2 bad input or usage.
enum ExitCode : int { exit_ok = 0, exit_negative = 1, exit_input_error = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace czcp::cli
