// Prints the first 50 leading digits of a^n in base 10 for a = 2..9 and the
// complexity function of each sequence.

#include <iostream>

#include "ldc/ldc.hpp"

int main() {
  for (unsigned a = 2; a <= 9; ++a) {
    const auto pair = ldc::check_admissible(a, 10);
    const auto line = ldc::complexity_line(pair);
    std::cout << '{' << a << "^n}  " << ldc::to_text(ldc::generate_prefix(pair, 50)) << "  p(n) = " << line.c
              << "n + " << line.d << '\n';
  }
}
