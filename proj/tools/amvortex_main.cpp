#include <iostream>

#include "amvortex/cli/commands.hpp"

int main(int argc, char** argv) { return amvortex::cli::run_cli(argc, argv, std::cout, std::cerr); }
