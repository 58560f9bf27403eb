#pragma once

#include <string>
#include <vector>

#include "vinberg/action/coinvariants.hpp"
#include "vinberg/report.hpp"
#include "vinberg/weyl/vector_field.hpp"

namespace vinberg::checks {

/// O(Mat2)-linear relations sum s_i mu(x_i) = 0 among the six table fields,
/// with homogeneous coefficients of degree 1..max_degree. Their values at a
/// point span the fiber of the relative localization's defining relations.
inline std::vector<std::vector<Poly>> moment_syzygies(int max_degree) {
  auto act = builtin_lr_action_mat2();
  const std::size_t n = act.lie().dim();
  std::vector<std::vector<Poly>> out;
  for (int k = 1; k <= max_degree; ++k) {
    auto mons = monomials_of_degree(4, k);
    std::vector<WeylOp> cols;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& m : mons) cols.push_back(Poly::term(m, Rational(1)) * act.field(i));
    std::map<WeylKey, std::size_t, WeylKeyLess> idx;
    std::vector<SparseEchelon::SparseVec> sparse;
    for (const auto& c : cols) {
      SparseEchelon::SparseVec v;
      for (const auto& [key, x] : c.terms()) v.emplace(idx.try_emplace(key, idx.size()).first->second, x);
      sparse.push_back(std::move(v));
    }
    QMatrix mat(idx.size(), cols.size());
    for (std::size_t j = 0; j < sparse.size(); ++j)
      for (const auto& [r, x] : sparse[j]) mat(r, j) = x;
    for (const auto& v : nullspace(mat)) {
      std::vector<Poly> syz(n, Poly(4));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < mons.size(); ++j)
          if (v[i * mons.size() + j] != 0) syz[i].add_term(mons[j], v[i * mons.size() + j]);
      out.push_back(std::move(syz));
    }
  }
  return out;
}

/// Fiber at p of D_pi (x)_U M, computed from the relations: M modulo the
/// span of sum s_i(p) x_i . M over the syzygies s.
inline std::size_t relative_fiber_dim(const FinDimBimodule& m, const std::vector<std::vector<Poly>>& syzygies,
                                      const RationalPoint& p) {
  std::vector<QVector> rel;
  for (const auto& s : syzygies) {
    QVector v(s.size());
    bool nonzero = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      v[i] = s[i].evaluate(p.coords);
      nonzero = nonzero || v[i] != 0;
    }
    if (nonzero) rel.push_back(std::move(v));
  }
  if (rel.empty()) return m.dim();
  return left_nullspace(action_span(m.rep(), rel)).size();
}

inline std::vector<RationalPoint> default_diagram_points() {
  std::vector<RationalPoint> out;
  for (const char* t : {"1,0,0,1", "2,0,0,1/2", "1,3,0,1", "1,0,0,0", "0,1,0,0", "0,0,1,0", "0,0,0,1", "2,3,4,6"})
    out.push_back(RationalPoint::parse(t));
  return out;
}

inline constexpr int kSyzygyDegree = 2;

/// Relative localization on Mat2 specialized to det = 1 and det = 0 against
/// localization_fiber on SL2 and on the rank-one chart.
inline CheckReport asymp_diagram_check(const std::vector<std::pair<std::string, FinDimBimodule>>& modules,
                                       const std::vector<RationalPoint>& points) {
  for (const auto& p : points)
    if (classify_point(p) == PointKind::Neither)
      throw PointError("asymp_diagram_check: point " + p.to_string() + " is on neither fiber");
  CheckReport rep;
  rep.check = "asymp-diagram";
  auto syz = moment_syzygies(kSyzygyDegree);
  json pts = json::array();
  for (const auto& p : points) pts.push_back(p.to_string());
  rep.parameters = {{"points", pts}, {"modules", modules.size()}, {"syzygy_degree", kSyzygyDegree}, {"syzygies", syz.size()}};
  for (const auto& [name, m] : modules)
    for (const auto& p : points) {
      std::size_t rel = relative_fiber_dim(m, syz, p);
      auto fib = localization_fiber(m, p);
      const char* side = classify_point(p) == PointKind::SL2 ? "det=1" : "det=0";
      rep.add(name + " at " + p.to_string() + " (" + side + "): relative vs direct", fib.coinvariants.dim, rel,
              rel == fib.coinvariants.dim);
    }
  return rep;
}

inline std::vector<std::pair<std::string, FinDimBimodule>> matrix_coefficient_modules(unsigned max_index) {
  std::vector<std::pair<std::string, FinDimBimodule>> out;
  for (unsigned m = 0; m <= max_index; ++m)
    for (unsigned k = 0; k <= max_index; ++k)
      out.emplace_back("V" + std::to_string(m) + "(x)V" + std::to_string(k) + "*", matrix_coefficient_bimodule(m, k));
  return out;
}

inline CheckReport asymp_diagram_check(unsigned max_index) {
  auto rep = asymp_diagram_check(matrix_coefficient_modules(max_index), default_diagram_points());
  rep.parameters["max_index"] = max_index;
  return rep;
}

/// Torus fiber of the rank-one chart over the base point: (t, 0, 0, 0), t != 0.
inline bool on_torus_fiber(const RationalPoint& p) {
  return p.coords[0] != 0 && p.coords[1] == 0 && p.coords[2] == 0 && p.coords[3] == 0;
}

struct ParabolicComparison {
  std::size_t staged_dim = 0;
  std::size_t direct_dim = 0;
  std::vector<Rational> staged_cartan;  // characteristic polynomial
  std::vector<Rational> direct_cartan;
};

/// Staged route: n (+) nbar coinvariants with the induced h (+) h action,
/// then coinvariants for the stabilizer of the H x H action on the torus at p.
/// Direct route: stabilizer coinvariants on the rank-one chart.
inline ParabolicComparison parabolic_compare(const FinDimBimodule& m, const RationalPoint& p) {
  if (!on_torus_fiber(p)) throw PointError("parabolic_rank1_check: point " + p.to_string() + " is off the torus fiber");
  using S = Sl2Pair;
  const auto& g = m.lie();
  auto act = builtin_lr_action_horocycle();
  LieSubalgebra nn(g, {g.basis_vector(S::E1), g.basis_vector(S::F2)});
  LieSubalgebra hh(g, {g.basis_vector(S::H1), g.basis_vector(S::H2)});
  auto stage1 = coinvariants(m, nn, hh);

  // H x H acting on the torus fiber: the h (+) h columns of the evaluation matrix at p.
  QMatrix ev = act.evaluation_matrix(p.vec());
  QMatrix ev_h(ev.rows(), 2);
  for (std::size_t r = 0; r < ev.rows(); ++r) {
    ev_h(r, 0) = ev(r, S::H1);
    ev_h(r, 1) = ev(r, S::H2);
  }
  auto torus_stab = nullspace(ev_h);
  auto euler = solve(ev_h, p.vec());
  if (!euler) throw std::logic_error("parabolic_rank1_check: Euler field is not in the torus action");

  ParabolicComparison out;
  std::size_t d1 = stage1.dim;
  auto on_stage1 = [&](const QVector& y) {
    QMatrix a(d1, d1);
    for (std::size_t i = 0; i < 2; ++i) {
      QMatrix t = stage1.induced[i];
      t *= y[i];
      a += t;
    }
    return a;
  };
  if (d1 == 0) {
    out.staged_dim = 0;
    out.staged_cartan = {Rational(1)};
  } else {
    std::vector<QMatrix> rels;
    for (const auto& y : torus_stab) rels.push_back(on_stage1(y));
    QMatrix span(d1, rels.size() * d1);
    for (std::size_t k = 0; k < rels.size(); ++k)
      for (std::size_t r = 0; r < d1; ++r)
        for (std::size_t c = 0; c < d1; ++c) span(r, k * d1 + c) = rels[k](r, c);
    auto ann = left_nullspace(span);
    out.staged_dim = ann.size();
    if (ann.empty()) {
      out.staged_cartan = {Rational(1)};
    } else {
      QMatrix proj = QMatrix::from_rows(ann, d1);
      out.staged_cartan = char_poly(induced_on_quotient(proj, on_stage1(*euler)));
    }
  }

  auto fib = localization_fiber(m, act, p);
  out.direct_dim = fib.coinvariants.dim;
  if (fib.coinvariants.dim == 0) {
    out.direct_cartan = {Rational(1)};
  } else {
    if (fib.coinvariants.induced.empty()) throw std::logic_error("parabolic_rank1_check: no Euler lift at a rank-one point");
    out.direct_cartan = char_poly(fib.coinvariants.induced[0]);
  }
  return out;
}

inline json poly_coeffs_json(const std::vector<Rational>& c) {
  json a = json::array();
  for (const auto& x : c) a.push_back(to_string(x));
  return a;
}

inline std::vector<RationalPoint> default_torus_points() {
  return {RationalPoint::parse("1,0,0,0"), RationalPoint::parse("2,0,0,0"), RationalPoint::parse("-1/3,0,0,0")};
}

inline CheckReport parabolic_rank1_check(const std::vector<std::pair<std::string, FinDimBimodule>>& modules,
                                         const std::vector<RationalPoint>& points) {
  for (const auto& p : points)
    if (!on_torus_fiber(p)) throw PointError("parabolic_rank1_check: point " + p.to_string() + " is off the torus fiber");
  CheckReport rep;
  rep.check = "parabolic";
  json pts = json::array();
  for (const auto& p : points) pts.push_back(p.to_string());
  rep.parameters = {{"points", pts}, {"modules", modules.size()}};
  for (const auto& [name, m] : modules)
    for (const auto& p : points) {
      auto c = parabolic_compare(m, p);
      std::string where = name + " at " + p.to_string();
      rep.add(where + ": staged vs direct dimension", c.direct_dim, c.staged_dim, c.staged_dim == c.direct_dim);
      rep.add(where + ": Cartan characteristic polynomial", poly_coeffs_json(c.direct_cartan), poly_coeffs_json(c.staged_cartan),
              c.staged_cartan == c.direct_cartan);
    }
  return rep;
}

inline CheckReport parabolic_rank1_check(unsigned max_index) {
  auto rep = parabolic_rank1_check(matrix_coefficient_modules(max_index), default_torus_points());
  rep.parameters["max_index"] = max_index;
  return rep;
}

}  // namespace vinberg::checks
