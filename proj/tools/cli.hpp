#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mstk::cli {

/// Parses and executes one command line (program name excluded).
/// Exit codes: 0 success, 1 a mathematical property failed to hold,
/// 2 usage or input error. Code 1 is never used for I/O faults.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mstk::cli
