#include "leftorder/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return leftorder::run_cli(argc, argv, std::cout, std::cerr); }
