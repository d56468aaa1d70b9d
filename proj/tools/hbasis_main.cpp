#include <iostream>

#include "hbasis/cli.hpp"

int main(int argc, char** argv) { return hbasis::run_cli(argc, argv, std::cout, std::cerr); }
