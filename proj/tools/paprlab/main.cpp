#include <iostream>

#include "paprlab/cli.hpp"

int main(int argc, char** argv) { return paprlab::cli::run(argc, argv, std::cout, std::cerr); }
