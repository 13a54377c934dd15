#include <iostream>

#include "thompson/cli.hpp"

int main(int argc, char** argv) {
    return thompson::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
