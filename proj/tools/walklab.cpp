#include <iostream>

#include "walklab/cli.hpp"

int main(int argc, char** argv) {
  return walklab::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
