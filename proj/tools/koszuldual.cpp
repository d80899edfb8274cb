#include <unistd.h>

#include <iostream>

#include "koszuldual/cli.hpp"

int main(int argc, char** argv) {
  return koszuldual::run_cli(argc, argv, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
