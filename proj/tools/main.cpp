#include <iostream>

#include "qperm/cli/cli.hpp"

int main(int argc, char** argv) { return qperm::cli::run(argc, argv, std::cout, std::cerr); }
