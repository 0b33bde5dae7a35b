#include <iostream>
#include <string>
#include <vector>

#include "weakmaps/cli.hpp"

int main(int argc, char** argv) {
  return wm::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
