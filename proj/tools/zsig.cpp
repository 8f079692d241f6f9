#include <iostream>

#include "zsig/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return zsig::run_cli(args, std::cout, std::cerr);
}
