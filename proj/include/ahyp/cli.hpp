#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ahyp {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 verification failure, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ahyp
