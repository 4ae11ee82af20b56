#include <iostream>

#include "npenta/cli.hpp"

int main(int argc, char** argv) { return npenta::cli::run(argc, argv, std::cout, std::cerr); }
