#include <iostream>

#include "trsmlab_cli/cli.hpp"

int main(int argc, char** argv) {
  return trsmlab::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
