#include <iostream>

#include "sdecomp/cli.hpp"

int main(int argc, char** argv) { return sdecomp::cli_dispatch(argc, argv, std::cout, std::cerr); }
