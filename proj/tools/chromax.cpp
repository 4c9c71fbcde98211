#include <iostream>

#include "chromax/cli.hpp"

int main(int argc, char** argv) { return chromax::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
