#include <iostream>
#include <string>
#include <vector>

#include "g2branch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return g2branch::cli::run(args, std::cout, std::cerr);
}
