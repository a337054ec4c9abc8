#include <iostream>

#include "imaginarity/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return imag::cli::run(args, std::cout, std::cerr);
}
