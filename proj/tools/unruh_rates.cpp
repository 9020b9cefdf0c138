#include <iostream>

#include "unruh/cli.hpp"

int main(int argc, char** argv) {
    return unruh::cli::run(argc, argv, std::cout, std::cerr);
}
