#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdst::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kVerifyFailed = 3 };

// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdst::cli
