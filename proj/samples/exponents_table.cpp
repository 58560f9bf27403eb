// Coinvariant exponents of Sym^m against the weights seen by matrix
// coefficients along diag(s, 1/s).
#include <iostream>

#include "vinberg/asymptotics/exponents.hpp"

int main() {
  using namespace vinberg;
  for (unsigned m = 0; m <= 8; ++m) {
    auto r = leading_exponent_result(m);
    std::cout << "m=" << m << "  coinvariants " << exponent_set_text(r.coinv.exponents) << "  weights "
              << integer_set_text(r.oracle) << "  bimodule " << exponent_set_text(r.bimodule_exponents)
              << (r.report.pass() ? "  ok" : "  MISMATCH") << "\n";
  }
}
