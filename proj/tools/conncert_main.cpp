#include <iostream>

#include "conncert/cli.hpp"

int main(int argc, char** argv) { return conncert::run_cli(argc, argv, std::cout, std::cerr); }
