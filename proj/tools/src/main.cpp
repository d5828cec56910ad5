#include "plqo_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return plqo::cli::run(argc, argv, std::cout, std::cerr); }
