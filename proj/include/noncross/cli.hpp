#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace noncross::cli {

/// Runs the command line (without the program name). Returns the exit
/// code: 0 on success, 2 on input errors, 3 when a cap is exceeded, 1 on
/// internal failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noncross::cli
