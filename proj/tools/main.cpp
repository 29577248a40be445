#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "pathalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool wants_stdin = false;
  for (const auto& a : args) wants_stdin = wants_stdin || a == "-";
  std::string input;
  if (wants_stdin) input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  auto outcome = pathalg::cli::run(args, input);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
