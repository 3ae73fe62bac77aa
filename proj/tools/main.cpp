#include <iostream>

#include "minicube/cli.hpp"

int main(int argc, char** argv) {
  return minicube::run_cli(argc, argv, std::cout, std::cerr);
}
