#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyflow::cli {

enum ExitCode : int {
    kOk = 0,
    kMaxIterations = 2,
    kDivergence = 3,
    kUsage = 64,
    kDataError = 65,
    kNoInput = 66,
    kSoftware = 70,
    kCannotCreate = 73,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyflow::cli
