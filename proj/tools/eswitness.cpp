#include "esw/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return esw::run_cli(argc, argv, std::cout, std::cerr);
}
