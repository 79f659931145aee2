#include <iostream>
#include <string>
#include <vector>

#include "binmat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return binmat::cli::run(args, std::cout, std::cerr);
}
