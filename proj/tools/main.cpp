#include <iostream>

#include "thermores/cli.hpp"

int main(int argc, char** argv) { return thermores::run_cli(argc, argv, std::cout, std::cerr); }
