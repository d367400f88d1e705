#include <iostream>
#include <string>
#include <vector>

#include "wdeg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wdeg::run_cli(args, std::cout, std::cerr);
}
