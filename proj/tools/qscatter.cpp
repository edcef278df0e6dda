#include <iostream>

#include "qscatter/cli.hpp"

int main(int argc, char** argv) { return qscatter::cli::run(argc, argv, std::cout, std::cerr); }
