// Prints the left/right moment fields on Mat2 and the image of the Casimir.
#include <iostream>

#include "vinberg/action/action.hpp"
#include "vinberg/weyl/serialize.hpp"

int main() {
  using namespace vinberg;
  auto act = builtin_lr_action_mat2();
  auto u = uenv_sl2_pair();
  const auto& names = QuotientRing::abcd();
  const auto& g = act.lie();
  for (std::size_t i = 0; i < g.dim(); ++i) std::cout << "mu(" << g.names()[i] << ") = " << to_text(act.field(i), names) << "\n";

  WeylOp c1 = moment_map(casimir_sl2(u, 0), act);
  WeylOp c2 = moment_map(casimir_sl2(u, 3), act);
  WeylOp eu = euler_operator(4);
  WeylOp rest = weyl_mul(eu, eu) - c1;
  std::cout << "mu(Delta(x)1)          = " << to_text(c1, names) << "\n";
  std::cout << "Eu^2 - mu(Delta(x)1)   = " << to_text(rest, names) << "\n";
  std::cout << "mu(Delta(x)1) == mu(1(x)Delta): " << std::boolalpha << (c1 == c2) << "\n";
}
