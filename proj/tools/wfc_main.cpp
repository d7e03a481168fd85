#include <iostream>
#include <vector>

#include "wfc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wfc::cli::run(args, std::cout, std::cerr);
}
