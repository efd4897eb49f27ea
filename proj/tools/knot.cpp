#include "knot/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return knot::run({argv, argv + argc}, std::cout, std::cerr);
}
