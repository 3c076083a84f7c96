#include <iostream>

#include "streamnd/cli.hpp"

int main(int argc, char **argv) { return streamnd::run_cli(argc, argv, std::cout, std::cerr); }
