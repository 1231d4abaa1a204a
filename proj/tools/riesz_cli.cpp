#include <iostream>

#include "riesz/cli.hpp"

int main(int argc, char** argv) {
  return riesz::cli::riesz_main(argc, argv, std::cout, std::cerr);
}
