#include <iostream>

#include "jel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jel::run_cli(args, std::cin, std::cout, std::cerr);
}
