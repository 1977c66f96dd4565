#include <iostream>
#include <string>
#include <vector>

#include "edim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return edim::run_cli(args, std::cout, std::cerr);
}
