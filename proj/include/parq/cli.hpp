#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parq {

// Runs the command-line tool in-process.  Exit codes: 0 success, 2 invalid
// input, 3 capacity guard tripped, 4 mathematical invariant violated.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parq
