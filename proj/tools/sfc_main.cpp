#include <iostream>
#include <string>
#include <vector>

#include "semifield/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semifield::runCli(args, std::cout);
}
