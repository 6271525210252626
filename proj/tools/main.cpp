#include <rpcover/cli.hpp>

#include <iostream>

int main(int argc, char ** argv) { return rpcover::run_cli(argc, argv, std::cout, std::cerr); }
