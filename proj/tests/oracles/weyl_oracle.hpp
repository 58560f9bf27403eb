#pragma once

// Reference Weyl product by literal rewriting of words with the single rule
// d_i x_i -> x_i d_i + 1 (all other adjacent pairs commute).

#include <map>
#include <random>
#include <vector>

#include "vinberg/weyl/weyl_op.hpp"

namespace oracle {

using vinberg::WeylOp;

/// Letter: variable index, and whether it is a derivative.
struct Letter {
  int var;
  bool deriv;
};
using Word = std::vector<Letter>;

inline Word word_of(const vinberg::Monomial& x, const vinberg::Monomial& d) {
  Word w;
  for (std::size_t i = 0; i < x.arity(); ++i)
    for (int e = 0; e < x[i]; ++e) w.push_back({static_cast<int>(i), false});
  for (std::size_t i = 0; i < d.arity(); ++i)
    for (int e = 0; e < d[i]; ++e) w.push_back({static_cast<int>(i), true});
  return w;
}

/// Normal-orders c * word by repeated rewriting, accumulating into out.
inline void normal_order(const Word& w, const vinberg::Rational& c, std::size_t arity, WeylOp& out) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k].deriv && !w[k + 1].deriv) {
      Word swapped = w;
      std::swap(swapped[k], swapped[k + 1]);
      normal_order(swapped, c, arity, out);
      if (w[k].var == w[k + 1].var) {
        Word shorter;
        for (std::size_t j = 0; j < w.size(); ++j)
          if (j != k && j != k + 1) shorter.push_back(w[j]);
        normal_order(shorter, c, arity, out);
      }
      return;
    }
  }
  vinberg::Monomial x(arity), d(arity);
  for (const auto& l : w) {
    auto& m = l.deriv ? d : x;
    m.set(l.var, m[l.var] + 1);
  }
  out.add_term(x, d, c);
}

inline WeylOp rewrite_mul(const WeylOp& p, const WeylOp& q) {
  WeylOp out(p.arity());
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms()) {
      Word w = word_of(kp.x, kp.d);
      Word v = word_of(kq.x, kq.d);
      w.insert(w.end(), v.begin(), v.end());
      normal_order(w, cp * cq, p.arity(), out);
    }
  return out;
}

inline WeylOp random_weyl(std::mt19937_64& rng, int max_order, int max_degree, int terms, std::size_t arity = 4) {
  std::uniform_int_distribution<int> coef(-3, 3), ord(0, max_order), deg(0, max_degree);
  std::uniform_int_distribution<int> var(0, static_cast<int>(arity) - 1);
  WeylOp op(arity);
  for (int t = 0; t < terms; ++t) {
    vinberg::Monomial x(arity), d(arity);
    int o = ord(rng), g = deg(rng);
    for (int k = 0; k < o; ++k) {
      int v = var(rng);
      d.set(v, d[v] + 1);
    }
    for (int k = 0; k < g; ++k) {
      int v = var(rng);
      x.set(v, x[v] + 1);
    }
    op.add_term(x, d, vinberg::Rational(coef(rng)));
  }
  return op;
}

}  // namespace oracle
