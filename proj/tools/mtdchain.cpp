#include <iostream>
#include <string>
#include <vector>

#include "mtdchain/cli.hpp"

int main(int argc, char** argv) {
  return mtdchain::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
