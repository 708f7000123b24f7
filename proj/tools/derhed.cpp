#include <iostream>
#include <string>
#include <vector>

#include "derhed/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return derhed::cli::run(std::move(args), std::cout);
}
