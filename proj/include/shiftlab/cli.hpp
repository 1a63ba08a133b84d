#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftlab {

// Exit codes: 0 success, 1 input error, 2 budget exceeded.
int run_cli(int argc, char** argv);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftlab
