#include <iostream>

#include "phgcli/cli.hpp"

int main(int argc, char** argv) { return phgcli::cli_dispatch(argc, argv, std::cout, std::cerr); }
