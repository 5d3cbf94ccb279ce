#include <iostream>

#include "moonshine/cli.hpp"

int main(int argc, char** argv) { return moonshine::cli_main(argc, argv, std::cout, std::cerr); }
