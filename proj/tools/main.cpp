#include <iostream>

#include "carmichael/cli.hpp"

int main(int argc, char** argv) { return carmichael::cli::run(argc, argv, std::cout, std::cerr); }
