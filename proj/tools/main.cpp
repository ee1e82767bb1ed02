#include <iostream>

#include "gsavbq/cli.hpp"

int main(int argc, char** argv) { return gsavbq::run_cli(argc, argv, std::cout, std::cerr); }
