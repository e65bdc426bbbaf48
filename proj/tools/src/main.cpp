#include <iostream>

#include "qxpress/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qxpress::cli::run(std::move(args), std::cout, std::cerr);
}
