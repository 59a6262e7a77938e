#include <iostream>
#include <string>
#include <vector>

#include "decindex/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    const std::vector<std::string> args(argv + 1, argv + argc);
    return decindex::cli::run(args, std::cin, std::cout, std::cerr);
}
