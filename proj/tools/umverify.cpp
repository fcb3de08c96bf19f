#include <iostream>
#include <string>
#include <vector>

#include "uml/cli.hpp"

int main(int argc, char** argv) {
  return uml::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
