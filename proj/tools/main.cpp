#include <iostream>
#include <string>
#include <vector>

#include "seaweed/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seaweed::cli::run(args, std::cout, std::cerr);
}
