#include <iostream>
#include <string>
#include <vector>

#include "hdet/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> arguments(argv + 1, argv + argc);
  return hdet::run_cli(arguments, std::cout, std::cerr);
}
