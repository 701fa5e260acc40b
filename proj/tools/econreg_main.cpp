#include <iostream>

#include "econreg/cli.hpp"

int main(int argc, char** argv) { return econreg::cli_main(argc, argv, std::cout, std::cerr); }
