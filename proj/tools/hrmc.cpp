#include <iostream>
#include <string>
#include <vector>

#include "hrmc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hrmc::run_cli(args, std::cout, std::cerr);
}
