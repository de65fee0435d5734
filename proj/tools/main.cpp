#include <iostream>
#include <vector>

#include "omega4/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return omega4::run_cli(args, std::cout, std::cerr);
}
