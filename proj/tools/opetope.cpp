#include <iostream>

#include "opetope/io/cli.hpp"

int main(int argc, char** argv) { return opetope::io::run_cli(argc, argv, std::cout, std::cerr); }
