#include <iostream>

#include "salem_cli/commands.hpp"

int main(int argc, char** argv) { return salem::cli::run_cli(argc, argv, std::cout, std::cerr); }
