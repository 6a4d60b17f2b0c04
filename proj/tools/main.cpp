#include <iostream>

#include "ecpairs/cli.hpp"

int main(int argc, char** argv) { return ecpairs::cli::run(argc, argv, std::cout, std::cerr); }
