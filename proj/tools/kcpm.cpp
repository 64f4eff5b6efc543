#include <iostream>

#include "kcpm/cli.hpp"

int main(int argc, char** argv) { return kcpm::run_cli(argc, argv, std::cout, std::cerr); }
