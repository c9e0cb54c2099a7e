#include <iostream>

#include "pillai/cli.hpp"

int main(int argc, char** argv) {
  return pillai::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
