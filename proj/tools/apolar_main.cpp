#include <iostream>

#include "apolar/cli.hpp"

int main(int argc, char** argv) { return apolar::cli::run(argc, argv, std::cout, std::cerr); }
