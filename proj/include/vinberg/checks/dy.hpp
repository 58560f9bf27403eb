#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vinberg/action/action.hpp"
#include "vinberg/report.hpp"

namespace vinberg::checks {

/// O(Y) # U(sl2 (+) sl2): elements sum c f (x) u with f a normal monomial of
/// O(Y) and u a PBW monomial, functions written to the left. Generators act
/// on functions through the moment-map table: x f = f x + x(f).
class SmashProduct {
 public:
  struct KeyLess {
    bool operator()(const std::pair<Monomial, Monomial>& l, const std::pair<Monomial, Monomial>& r) const {
      DegLexLess less;
      if (less(l.second, r.second)) return true;
      if (less(r.second, l.second)) return false;
      return less(l.first, r.first);
    }
  };
  using Elem = std::map<std::pair<Monomial, Monomial>, Rational, KeyLess>;

  SmashProduct() : ring_(QuotientRing::horocycle()), act_(builtin_lr_action_mat2()), u_(uenv_sl2_pair()) {}

  const QuotientRing& ring() const { return ring_; }
  const InfinitesimalAction& action() const { return act_; }
  const std::shared_ptr<const UEnv>& uenv() const { return u_; }

  static void add(Elem& e, const Monomial& f, const Monomial& u, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = e.try_emplace({f, u}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) e.erase(it);
    }
  }

  Elem term(const Monomial& f, const Monomial& u) const {
    Elem e;
    add(e, f, u, Rational(1));
    return e;
  }

  /// x_i * e.
  Elem left_generator(std::size_t i, const Elem& e) const {
    Elem out;
    for (const auto& [k, c] : e) {
      Poly prod = u_->left_mul(i, Poly::term(k.second, Rational(1)));
      for (const auto& [m, v] : prod.terms()) add(out, k.first, m, c * v);
      Poly df = ring_.normal_form(apply(act_.field(i), Poly::term(k.first, Rational(1))));
      for (const auto& [m, v] : df.terms()) add(out, m, k.second, c * v);
    }
    return out;
  }

  /// w * e for w in U, given in PBW form.
  Elem left_uenv(const UEnvElement& w, const Elem& e) const {
    Elem out;
    for (const auto& [m, c] : w.terms()) {
      Elem acc = e;
      for (std::size_t i = u_->dim(); i-- > 0;)
        for (int k = 0; k < m[i]; ++k) acc = left_generator(i, acc);
      for (const auto& [k, v] : acc) add(out, k.first, k.second, c * v);
    }
    return out;
  }

  /// g * e for a function g.
  Elem left_function(const Monomial& g, const Elem& e) const {
    Elem out;
    for (const auto& [k, c] : e) {
      Poly prod = ring_.normal_form(Poly::term(g * k.first, Rational(1)));
      for (const auto& [m, v] : prod.terms()) add(out, m, k.second, c * v);
    }
    return out;
  }

  /// e * w for w in U.
  Elem right_uenv(const Elem& e, const UEnvElement& w) const {
    Elem out;
    for (const auto& [k, c] : e) {
      UEnvElement prod = u_->monomial(k.second) * w;
      for (const auto& [m, v] : prod.terms()) add(out, k.first, m, c * v);
    }
    return out;
  }

 private:
  QuotientRing ring_;
  InfinitesimalAction act_;
  std::shared_ptr<const UEnv> u_;
};

/// Weights under (H (x) 1, 1 (x) H).
inline std::array<int, 2> function_weight(const Monomial& f) {
  return {-f[0] - f[1] + f[2] + f[3], f[0] - f[1] + f[2] - f[3]};
}
inline std::array<int, 2> pbw_weight(const Monomial& u) {
  return {2 * (u[2] - u[0]), 2 * (u[5] - u[3])};
}

/// Realizes smash-product elements as operators on O(Y), recorded by their
/// values on the normal monomials of degree <= test_degree.
class Realizer {
 public:
  Realizer(const SmashProduct& s, int test_degree) : s_(s) {
    for (const auto& m : s_.ring().normal_monomials_up_to_degree(test_degree)) tests_.push_back(Poly::term(m, Rational(1)));
  }

  std::size_t test_count() const { return tests_.size(); }

  /// mu(u) applied to every test function, memoized per PBW monomial.
  const std::vector<Poly>& images(const Monomial& u) {
    auto it = cache_.find(u);
    if (it != cache_.end()) return it->second;
    std::vector<Poly> out;
    if (u.degree() == 0) {
      out = tests_;
    } else {
      std::size_t i = 0;
      while (u[i] == 0) ++i;
      Monomial rest = u;
      rest.set(i, u[i] - 1);
      const auto& prev = images(rest);
      for (const auto& p : prev) out.push_back(s_.ring().normal_form(apply(s_.action().field(i), p)));
    }
    return cache_.emplace(u, std::move(out)).first->second;
  }

  SparseEchelon::SparseVec realize(const SmashProduct::Elem& e) {
    std::map<std::pair<std::size_t, Monomial>, Rational, PairLess> acc;
    for (const auto& [k, c] : e) {
      const auto& imgs = images(k.second);
      for (std::size_t t = 0; t < imgs.size(); ++t) {
        if (imgs[t].is_zero()) continue;
        Poly prod = s_.ring().normal_form(Poly::term(k.first, Rational(1)) * imgs[t]);
        for (const auto& [m, v] : prod.terms()) {
          auto [it, inserted] = acc.try_emplace({t, m}, c * v);
          if (!inserted) it->second += c * v;
        }
      }
    }
    SparseEchelon::SparseVec out;
    for (const auto& [k, v] : acc)
      if (v != 0) out.emplace(index_.try_emplace(k, index_.size()).first->second, v);
    return out;
  }

 private:
  struct PairLess {
    bool operator()(const std::pair<std::size_t, Monomial>& l, const std::pair<std::size_t, Monomial>& r) const {
      if (l.first != r.first) return l.first < r.first;
      return DegLexLess{}(l.second, r.second);
    }
  };
  const SmashProduct& s_;
  std::vector<Poly> tests_;
  std::map<Monomial, std::vector<Poly>, DegLexLess> cache_;
  std::map<std::pair<std::size_t, Monomial>, std::size_t, PairLess> index_;
};

struct DyCell {
  int pbw = 0;
  int poly = 0;
  std::size_t kernel_dim = 0;
  std::size_t ideal_dim = 0;
};

struct DyResult {
  bool casimirs_agree = false;
  bool generators_realize_to_zero = false;
  std::vector<DyCell> cells;  // cumulative over poly degree <= q
};

/// Kernel of f (x) u -> f mu(u) on O(Y) against the two-sided ideal generated
/// by Delta1 - Delta2, for PBW degree <= p and polynomial degree <= q.
/// The ideal part of bidegree (p, q) is the span of f (Delta1 - Delta2) g v
/// (deg f + deg g = e, deg v <= p - 1) intersected with PBW degree <= p.
inline DyResult dy_kernel_table(int pmax, int qmax, int test_degree) {
  SmashProduct s;
  Realizer real(s, test_degree);
  const auto& u = s.uenv();
  UEnvElement rel = casimir_sl2(u, 0) - casimir_sl2(u, 3);
  DyResult res;
  res.casimirs_agree = moment_map(rel, s.action()).is_zero();
  res.generators_realize_to_zero = true;

  std::vector<std::vector<Monomial>> pbw(pmax + 1);
  for (int p = 0; p <= pmax; ++p) pbw[p] = monomials_of_degree(6, p);

  // kernel[p][e] and ideal[p][e], summed over weight blocks.
  std::vector<std::vector<std::size_t>> kernel(pmax + 1, std::vector<std::size_t>(qmax + 1, 0));
  std::vector<std::vector<std::size_t>> ideal = kernel;

  using Weight = std::array<int, 2>;
  for (int e = 0; e <= qmax; ++e) {
    auto fs = s.ring().normal_monomials_of_degree(e);
    // Kernel side: columns sorted by PBW degree inside each weight block.
    std::map<Weight, SparseEchelon> ech;
    std::map<Weight, std::size_t> count;
    for (int p = 0; p <= pmax; ++p) {
      for (const auto& f : fs)
        for (const auto& v : pbw[p]) {
          auto wf = function_weight(f), wv = pbw_weight(v);
          Weight w{wf[0] + wv[0], wf[1] + wv[1]};
          ech[w].insert(real.realize(s.term(f, v)));
          ++count[w];
        }
      std::size_t k = 0;
      for (const auto& [w, n] : count) k += n - ech[w].rank();
      kernel[p][e] = k;
    }

    // Ideal side: generators X(g, v) = (Delta1 - Delta2) g v, then f * X.
    struct Gen {
      SmashProduct::Elem elem;
      int vdeg;
      Weight w;
    };
    std::vector<Gen> gens;
    for (int gd = 0; gd <= e; ++gd)
      for (const auto& g : s.ring().normal_monomials_of_degree(gd))
        for (int vd = 0; vd + 1 <= pmax; ++vd)
          for (const auto& v : pbw[vd]) {
            auto x = s.left_uenv(rel, s.term(g, v));
            if (!real.realize(x).empty()) res.generators_realize_to_zero = false;
            for (const auto& f : s.ring().normal_monomials_of_degree(e - gd)) {
              auto wf = function_weight(f), wg = function_weight(g), wv = pbw_weight(v);
              gens.push_back({s.left_function(f, x), vd, {wf[0] + wg[0] + wv[0], wf[1] + wg[1] + wv[1]}});
            }
          }
    for (int p = 0; p <= pmax; ++p) {
      std::map<Weight, SparseEchelon> full, high;
      std::map<Weight, std::map<std::pair<Monomial, Monomial>, std::size_t, SmashProduct::KeyLess>> idx;
      for (const auto& gen : gens) {
        if (gen.vdeg > p - 1) continue;
        auto& ix = idx[gen.w];
        SparseEchelon::SparseVec all, hi;
        for (const auto& [k, c] : gen.elem) {
          std::size_t id = ix.try_emplace(k, ix.size()).first->second;
          all.emplace(id, c);
          if (k.second.degree() > p) hi.emplace(id, c);
        }
        full[gen.w].insert(all);
        high[gen.w].insert(hi);
      }
      std::size_t d = 0;
      for (auto& [w, e2] : full) d += e2.rank() - high[w].rank();
      ideal[p][e] = d;
    }
  }

  for (int p = 0; p <= pmax; ++p) {
    std::size_t k = 0, i = 0;
    for (int q = 0; q <= qmax; ++q) {
      k += kernel[p][q];
      i += ideal[p][q];
      res.cells.push_back({p, q, k, i});
    }
  }
  return res;
}

inline constexpr int kDyTestDegree = 8;

/// D_Y relation: mu(Delta1) = mu(Delta2) on Mat2, and bounded kernels of the
/// realization on O(Y) agree with the ideal generated by Delta1 - Delta2.
inline CheckReport verify_dy_relation(int pbw_bound, int poly_bound, int test_degree = kDyTestDegree) {
  if (pbw_bound < 2) throw std::invalid_argument("verify_dy_relation: PBW bound must be at least 2");
  CheckReport rep;
  rep.check = "dy";
  rep.parameters = {{"pbw_bound", pbw_bound}, {"poly_bound", poly_bound}, {"test_degree", test_degree}};
  auto r = dy_kernel_table(pbw_bound, poly_bound, test_degree);
  rep.add("mu(Delta(x)1) - mu(1(x)Delta) = 0 on Mat2", true, r.casimirs_agree, r.casimirs_agree);
  rep.add("(Delta1 - Delta2) g v acts by 0 on O(Y)", true, r.generators_realize_to_zero, r.generators_realize_to_zero);
  for (const auto& c : r.cells) {
    rep.add_eq("bidegree (" + std::to_string(c.pbw) + "," + std::to_string(c.poly) + "): kernel dim vs ideal dim", c.ideal_dim, c.kernel_dim);
  }
  return rep;
}

}  // namespace vinberg::checks
