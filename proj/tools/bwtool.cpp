#include <iostream>
#include <string>
#include <vector>

#include "bw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bw::run_cli(args, std::cout, std::cerr);
}
