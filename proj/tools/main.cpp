#include <iostream>
#include <string>
#include <vector>

#include "halphen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return halphen::cli::run(args, std::cout, std::cerr);
}
