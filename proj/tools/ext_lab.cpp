#include <iostream>

#include "extlab/cli.hpp"

int main(int argc, char** argv) { return extlab::cli::run(argc, argv, std::cout, std::cerr); }
