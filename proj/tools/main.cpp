#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return sdb::cli::dispatch(argc, argv, std::cout, std::cerr); }
