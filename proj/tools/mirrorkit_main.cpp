#include "mirrorkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mirrorkit::run_cli(argc, argv, std::cout, std::cerr); }
