#pragma once

// Deliberately naive reference implementations used to freeze expected
// values. None of these share code paths with the library beyond Poly
// arithmetic.

#include <random>

#include "vinberg/exactalg/poly.hpp"
#include "vinberg/exactalg/serialize.hpp"

namespace oracle {

using vinberg::Monomial;
using vinberg::Poly;
using vinberg::Rational;

inline const std::vector<std::string>& abcd() {
  static const std::vector<std::string> names{"a", "b", "c", "d"};
  return names;
}

inline Poly P(const std::string& text) { return vinberg::parse_poly(text, abcd()); }

/// Replaces one factor ad by bc + kappa at a time until no term contains ad.
inline Poly substitute_ad(const Poly& f, long kappa) {
  Poly cur = f;
  while (true) {
    bool changed = false;
    Poly next(4);
    for (const auto& [m, c] : cur.terms()) {
      if (m[0] >= 1 && m[3] >= 1 && !changed) {
        Monomial rest = m;
        rest.set(0, m[0] - 1);
        rest.set(3, m[3] - 1);
        Monomial bc = rest;
        bc.set(1, rest[1] + 1);
        bc.set(2, rest[2] + 1);
        next.add_term(bc, c);
        next.add_term(rest, c * kappa);
        changed = true;
      } else {
        next.add_term(m, c);
      }
    }
    cur = std::move(next);
    if (!changed) return cur;
  }
}

/// Random polynomial in 4 variables with small integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-3, 3), nterms(1, max_terms);
  Poly p(4);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    int d = deg(rng);
    Monomial m(4);
    for (int k = 0; k < d; ++k) {
      int v = std::uniform_int_distribution<int>(0, 3)(rng);
      m.set(v, m[v] + 1);
    }
    p.add_term(m, Rational(coef(rng)));
  }
  return p;
}

}  // namespace oracle
