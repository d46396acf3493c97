#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dbialg::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kResourceGuard = 3 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dbialg::cli
