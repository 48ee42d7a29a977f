#include <iostream>
#include <string>
#include <vector>

#include "edgekit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return edgekit::cli::run(args, std::cout, std::cerr);
}
