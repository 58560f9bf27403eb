// Fibers of the localization of V_m (x) V_k^* over points of SL2 and of the
// rank-one chart, with the induced Euler action where it exists.
#include <iostream>

#include "vinberg/action/coinvariants.hpp"

int main() {
  using namespace vinberg;
  const char* points[] = {"1,0,0,1", "2,1,1,1", "1,0,0,0", "0,0,1,0", "1,2,1/2,1"};
  std::cout << "m k  point        kind       dim\n";
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned k = 0; k <= 3; ++k) {
      auto bm = matrix_coefficient_bimodule(m, k);
      for (const char* text : points) {
        auto p = RationalPoint::parse(text);
        auto fib = localization_fiber(bm, p);
        std::cout << m << " " << k << "  " << text << std::string(13 - std::string(text).size(), ' ')
                  << (classify_point(p) == PointKind::SL2 ? "SL2        " : "horocycle  ") << fib.coinvariants.dim;
        if (fib.cartan && fib.coinvariants.dim > 0 && !fib.coinvariants.induced.empty())
          std::cout << "  Euler " << to_json(fib.coinvariants.induced[0]).dump();
        std::cout << "\n";
      }
    }
}
