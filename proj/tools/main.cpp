#include <iostream>

#include "z2norm/cli.hpp"

int main(int argc, char** argv) {
  return z2norm::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
