#include <iostream>

#include "nearfac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nearfac::cli::run(args, std::cout, std::cerr);
}
