#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return bnf::cli::run(argc, argv, std::cout, std::cerr); }
