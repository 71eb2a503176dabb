#include <iostream>

#include "abelian/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return abelian::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
