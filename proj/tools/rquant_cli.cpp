#include <iostream>

#include "rquant/cli.hpp"

int main(int argc, char** argv) { return rquant::cli::main(argc, argv, std::cout, std::cerr); }
