#include <iostream>

#include "kpalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kpalg::run(args, std::cout, std::cerr);
}
