#include <iostream>

#include "ahyp/cli.hpp"

int main(int argc, char** argv) {
  return ahyp::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
