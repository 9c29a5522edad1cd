#include <iostream>
#include <string>
#include <vector>

#include "dblcone/cert.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dblcone::run_command(args, std::cout, std::cerr);
}
