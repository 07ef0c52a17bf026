#include <iostream>
#include <string>
#include <vector>

#include "cgzic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return cgzic::cli::run(args, std::cout, std::cerr);
}
