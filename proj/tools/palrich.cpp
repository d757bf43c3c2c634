#include <iostream>

#include "palrich/cli.hpp"

int main(int argc, char** argv) { return palrich::cli::run(argc, argv, std::cout, std::cerr); }
