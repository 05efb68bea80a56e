// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <cstring>
#include <iostream>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  polywythoff::acceptance::Options options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
    if (std::strcmp(argv[i], "--large") == 0) options.large = true;
  }
  auto results = polywythoff::acceptance::run_all(options);
  polywythoff::acceptance::print_table(std::cout, results);
  return polywythoff::acceptance::all_passed(results) ? 0 : 1;
}
