#include <iostream>

#include "relkit/cli.hpp"

int main(int argc, char** argv) {
  return relkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
