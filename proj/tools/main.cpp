#include <iostream>
#include <string>
#include <vector>

#include "recperm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return recperm::run_cli(args, std::cout, std::cerr);
}
