#include <iostream>

#include "twistcy/cli.hpp"

int main(int argc, char** argv) { return twistcy::run_cli(argc, argv, std::cout, std::cerr); }
