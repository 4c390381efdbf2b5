#include "sharp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sharp::run_cli(argc, argv, std::cout, std::cerr); }
