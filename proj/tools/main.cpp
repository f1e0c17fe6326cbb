#include <iostream>
#include <variant>

#include "cli.hpp"

int main(int argc, char** argv) {
  auto parsed = faircert::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  try {
    return faircert::cli::run(std::get<faircert::cli::CliArgs>(parsed), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return faircert::cli::kExitInternal;
  }
}
