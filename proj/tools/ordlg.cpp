#include <iostream>

#include "ordlg/cli.hpp"

int main(int argc, char** argv) {
  return ordlg::cli::run(argc, argv, std::cout, std::cerr);
}
