#include <iostream>

#include "cli.hh"

int main(int argc, char** argv) { return berge::cli::run(argc, argv, std::cout, std::cerr); }
