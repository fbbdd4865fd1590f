#include <iostream>
#include <string>
#include <vector>

#include "leafine/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::ios::sync_with_stdio(false);
  return leafine::cli::run(args, std::cin, std::cout, std::cerr);
}
