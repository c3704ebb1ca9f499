#include <iostream>
#include <string>
#include <vector>

#include "gorbit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gorbit::run_command(args, std::cout, std::cerr);
}
