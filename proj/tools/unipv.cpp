#include <iostream>

#include "unipv/cli.hpp"

int main(int argc, char** argv) {
  return unipv::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
