#include <hilbkx/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return hilbkx::cli::run(argc, argv, std::cout, std::cerr); }
