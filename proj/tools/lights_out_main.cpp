#include <iostream>
#include <string>
#include <vector>

#include "lights_out/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lights_out::cli::run(args, std::cout, std::cerr);
}
