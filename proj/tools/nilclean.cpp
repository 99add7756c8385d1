#include <iostream>

#include "nilclean/cli.hpp"

int main(int argc, char** argv) { return nilclean::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
