#include <iostream>
#include <vector>

#include "circ3/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return circ3::run_cli(args, std::cout, std::cerr);
}
