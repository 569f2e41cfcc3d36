#include <iostream>
#include <string>
#include <vector>

#include "shefferkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return shefferkit::cli::run(args, std::cout, std::cerr);
}
