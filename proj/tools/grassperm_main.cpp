#include <iostream>
#include <string>
#include <vector>

#include "grassperm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grassperm::cli::run(args, std::cout, std::cerr);
}
