#include <iostream>

#include "corrtree/cli.hpp"

int main(int argc, char** argv) { return corrtree::cli::main(argc, argv, std::cout, std::cerr); }
