#include <iostream>

#include "p23/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return p23::run_cli(args, std::cout, std::cerr);
}
