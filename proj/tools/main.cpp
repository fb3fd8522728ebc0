#include <iostream>

#include "cli.hpp"
#include "nilclean/kernels.hpp"

int main(int argc, char** argv) {
  nilclean::kernels::apply_thread_limit_from_env();
  return nilclean::cli::run(argc, argv, std::cout, std::cerr);
}
