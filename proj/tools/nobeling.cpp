#include <iostream>
#include <string>
#include <vector>

#include "nobeling/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return nobeling::cli::run(args, std::cout, std::cerr);
}
