#include <iostream>

#include "ordspace/cli.hpp"

int main(int argc, char** argv) { return ordspace::run_cli(argc, argv, std::cout, std::cerr); }
