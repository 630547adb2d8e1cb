#include <iostream>

#include "monoidrep/cli.hpp"

int main(int argc, char** argv) {
  return monoidrep::run_cli(argc, argv, std::cout, std::cerr);
}
