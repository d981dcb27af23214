#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcl {

// Runs the tcl command line. `in` backs the "-" path. Returns the exit code:
// 0 success, 1 verdict false or pipeline stage failure, 2 usage, parse or
// precondition error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tcl
