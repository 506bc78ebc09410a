#include <iostream>
#include <string>
#include <vector>

#include "nesto/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nesto::run(args, std::cout, std::cerr);
}
