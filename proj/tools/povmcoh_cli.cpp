#include <iostream>

#include "povmcoh/cli.hpp"

int main(int argc, char** argv) {
  return povmcoh::cli_main(argc, argv, std::cout, std::cerr);
}
