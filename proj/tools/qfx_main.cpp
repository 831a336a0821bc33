#include <iostream>
#include <vector>

#include "qfx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qfx::cli::run(args, std::cout, std::cerr);
}
