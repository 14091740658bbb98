#include <iostream>
#include <string>
#include <vector>

#include "char2paley/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return char2paley::cli::run(args, std::cout, std::cerr);
}
