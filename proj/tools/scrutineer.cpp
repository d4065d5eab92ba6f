#include <iostream>
#include <string>
#include <vector>

#include "scrutineer/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scrutineer::run(args, std::cout, std::cerr);
}
