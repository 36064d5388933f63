#include <iostream>

#include "bsf/cli.hpp"

int main(int argc, char** argv) {
    return bsf::run_cli(argc, argv, std::cout, std::cerr);
}
