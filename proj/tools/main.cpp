#include <iostream>

#include "nucleus/cli.hpp"

int main(int argc, char** argv) { return nucleus::run_cli(argc, argv, std::cout, std::cerr); }
