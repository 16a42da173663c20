#include "mbfgs/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
    return mbfgs::run_cli(argc, argv, std::cout, std::cerr);
}
