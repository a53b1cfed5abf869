#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctk::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command. `args` excludes the program name; `in` backs the `-`
/// input. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace ctk::cli
