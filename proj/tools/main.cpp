#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  auto parsed = wht::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return wht::cli::run(std::get<wht::cli::CliConfig>(parsed), std::cin, std::cout, std::cerr);
}
