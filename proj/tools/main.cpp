#include <iostream>

#include "dirnet/cli.hpp"

int main(int argc, char** argv) {
  return dirnet::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
