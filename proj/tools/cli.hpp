#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charmod::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kInternal = 3, kPrecision = 4 };

// Runs the command line; everything is written to out/err, nothing to the process streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace charmod::cli
