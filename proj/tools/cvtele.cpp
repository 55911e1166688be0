#include <iostream>
#include <string>
#include <vector>

#include "cvtele/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cvtele::run_cli(args, std::cout, std::cerr);
}
