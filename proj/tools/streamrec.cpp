#include <iostream>
#include <string>
#include <vector>

#include "streamrec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return streamrec::run_cli(args, std::cin, std::cout, std::cerr);
}
