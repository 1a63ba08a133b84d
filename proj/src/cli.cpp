#include "shiftlab/cli.hpp"

#include <iostream>

namespace shiftlab {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    (void)args;
    (void)out;
    err << "shiftlab: command-line interface under construction\n";
    return 1;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace shiftlab
