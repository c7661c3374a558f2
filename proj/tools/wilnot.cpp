#include <iostream>

#include "wilnot/cli.hpp"

int main(int argc, char** argv) { return wilnot::cli::run(argc, argv, std::cout, std::cerr); }
