#include <iostream>
#include <string>
#include <vector>

#include "ybk/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ybk::cli::run(args, std::cout, std::cerr);
}
