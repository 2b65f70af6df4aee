#include <iostream>

#include "qlink/cli.hpp"

int main(int argc, char** argv) {
  return qlink::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
