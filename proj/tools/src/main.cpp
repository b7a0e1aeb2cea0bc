#include "sgal_cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return sgal::cli::main_entry(argc, argv, std::cout, std::cerr); }
