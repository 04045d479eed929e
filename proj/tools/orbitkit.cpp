#include <iostream>

#include "orbitkit/cli.hpp"

int main(int argc, char** argv) { return orbitkit::run_cli(argc, argv, std::cout, std::cerr); }
