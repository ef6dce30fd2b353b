#include <iostream>
#include <vector>

#include "hellylab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hellylab::run_cli(args, std::cout, std::cerr);
}
