#include <iostream>

#include "rtorsion/cli.hpp"

int main(int argc, char** argv) { return rtorsion::run_cli(argc, argv, std::cout, std::cerr); }
