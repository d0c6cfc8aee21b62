#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace avdc::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kCounterexample = 3 };

// Runs one invocation. args excludes the program name. Stdin is read when a
// command needs a graph and no input path (or "-") is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace avdc::cli
