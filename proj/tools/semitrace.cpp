#include <iostream>

#include "semitrace/cli.hpp"

int main(int argc, char** argv) {
  return semitrace::cli::main(argc, argv, std::cout, std::cerr);
}
