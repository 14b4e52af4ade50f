#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpeq::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kCapacity = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpeq::cli
