#include <iostream>

#include "formhasse/cli.hpp"

int main(int argc, char** argv) {
  return formhasse::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
