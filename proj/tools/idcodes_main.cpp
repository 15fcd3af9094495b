#include <iostream>

#include "idcodes/cli.hpp"

int main(int argc, char** argv) { return idcodes::run_cli(argc, argv, std::cout, std::cerr); }
