#include <iostream>

#include "haarforge/cli.hpp"

int main(int argc, char** argv) { return haarforge::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
