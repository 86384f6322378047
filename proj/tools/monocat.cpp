#include <iostream>

#include "monocat/cli.hpp"

int main(int argc, char** argv) { return monocat::run_cli(argc, argv, std::cout, std::cerr); }
