#include <iostream>

#include "circlespace/cli.hpp"

int main(int argc, char** argv) { return circlespace::run(argc, argv, std::cout, std::cerr); }
