#include <iostream>

#include "liken/cli.hpp"

int main(int argc, char** argv) { return liken::run_cli(argc, argv, std::cout, std::cerr); }
