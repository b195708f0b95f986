#include <iostream>

#include "wittflag/cli.hpp"

int main(int argc, char** argv) { return wf::run_cli(argc, argv, std::cout, std::cerr); }
