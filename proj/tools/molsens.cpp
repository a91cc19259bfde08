#include <iostream>
#include <string>
#include <vector>

#include "molsens/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return molsens::run_cli(args, std::cout, std::cerr);
}
