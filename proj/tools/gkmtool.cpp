#include <iostream>

#include "gkm/cli.hpp"

int main(int argc, char** argv) { return gkm::run(argc, argv, std::cout, std::cerr); }
