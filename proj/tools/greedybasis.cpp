#include <iostream>

#include "greedybasis/cli.hpp"

int main(int argc, char** argv) { return greedybasis::run_cli(argc, argv, std::cout, std::cerr); }
