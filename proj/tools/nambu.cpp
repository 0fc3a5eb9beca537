#include <iostream>
#include <string>
#include <vector>

#include "nambu/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nambu::cli::run(args, std::cout, std::cerr);
}
