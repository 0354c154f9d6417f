#include <iostream>
#include <string>
#include <vector>

#include "lielevel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lielevel::cli::run(std::move(args), std::cout, std::cerr);
}
