#include <iostream>

#include "liederiv/goldens.hpp"

int main() {
  liederiv::GoldenOptions options;
  options.progress = &std::cout;
  return liederiv::run_goldens_with_output(std::cout, options) == 0 ? 0 : 1;
}
