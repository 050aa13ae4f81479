#include <iostream>
#include <string>
#include <vector>

#include "csop/cli/commands.hpp"

int main(int argc, char** argv) {
  return csop::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
