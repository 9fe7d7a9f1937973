#include <iostream>
#include <string>
#include <vector>

#include "k3bn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k3bn::cli::run(args, std::cout, std::cerr);
}
