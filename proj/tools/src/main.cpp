#include <iostream>

#include "psl2cov_cli/app.hpp"

int main(int argc, char** argv) { return psl2cov::cli::run(argc, argv, std::cout, std::cerr); }
