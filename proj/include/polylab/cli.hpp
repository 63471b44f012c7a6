#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polylab::cli {

// Entry point shared by the binary and the tests. Returns the process exit
// status: 0 when every certificate in scope passed.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace polylab::cli
