#include "shiftlab/cli.hpp"

int main(int argc, char** argv) {
    return shiftlab::run_cli(argc, argv);
}
