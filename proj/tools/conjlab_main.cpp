#include <iostream>

#include "conjlab/cli.hpp"

int main(int argc, char** argv) { return conjlab::cli::run(argc, argv, std::cout, std::cerr); }
