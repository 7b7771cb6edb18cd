#include <iostream>

#include "xhtpy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xhtpy::run_cli(args, std::cout, std::cerr);
}
