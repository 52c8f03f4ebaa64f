#include <iostream>

#include "fracdq_app/commands.hpp"

int main(int argc, char** argv) {
  return fracdq::app::run_cli(argc, argv, std::cout, std::cerr);
}
