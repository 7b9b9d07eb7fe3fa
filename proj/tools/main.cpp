#include "cli.hpp"

int main(int argc, char** argv) { return rootstat::cli::run_cli(argc, argv, std::cout, std::cerr); }
