#include <iostream>
#include <string>
#include <vector>

#include "tropiball/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tropiball::run_cli(args, std::cout, std::cerr);
}
