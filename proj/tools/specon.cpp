#include <iostream>

#include "specon/cli.hpp"

int main(int argc, char** argv) { return specon::run_cli(argc, argv, std::cout, std::cerr); }
