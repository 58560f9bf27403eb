#pragma once

#include <string>
#include <vector>

#include "vinberg/exactalg/serialize.hpp"
#include "vinberg/report.hpp"
#include "vinberg/rees/filtered.hpp"
#include "vinberg/weyl/vector_field.hpp"

namespace vinberg {

/// Rees algebra as a presentation: graded generators (with their levels),
/// lattice variables z^{alpha_i}, and the homogenized relation in the
/// variables (generators..., z...).
struct ReesPresentation {
  std::vector<std::string> names;
  std::vector<LevelValue> levels;
  std::vector<std::string> lattice_names;
  LatticeOrder order;
  Poly relation;

  std::size_t arity() const { return names.size(); }

  /// The relation with z^{alpha_i} = p_i, in the generator variables only.
  Poly specialize(const std::vector<Rational>& p) const {
    if (p.size() != lattice_names.size()) throw ArityError("rees: point of wrong rank");
    std::vector<Poly> images;
    for (std::size_t i = 0; i < names.size(); ++i) images.push_back(Poly::variable(names.size(), i));
    for (const auto& v : p) images.push_back(Poly::constant(names.size(), v));
    return relation.substitute(images);
  }
};

/// Rees(O(SL2)) = Q[A,B,C,D] with AD - BC = z, z = t^alpha.
inline ReesPresentation rees_build(const FilteredAlgebra& a) {
  if (a.ring.kind() != QuotientRing::Kind::SL2 || a.order.rank() != 1 || a.order.generators()[0][0] != 2) {
    throw std::invalid_argument("rees_build: only O(SL2) with the Peter-Weyl filtration is supported");
  }
  Poly rel(5);
  rel.add_term(Monomial{1, 0, 0, 1, 0}, Rational(1));
  rel.add_term(Monomial{0, 1, 1, 0, 0}, Rational(-1));
  rel.add_term(Monomial{0, 0, 0, 0, 1}, Rational(-1));
  return {{"A", "B", "C", "D"}, a.generator_levels, {"z"}, a.order, rel};
}

/// Rees(A) / (z^{alpha_i} - p_i).
inline QuotientRing rees_fiber(const ReesPresentation& r, const std::vector<Rational>& p) {
  Poly rel = r.specialize(p);
  bool all_one = true, all_zero = true;
  for (const auto& v : p) {
    all_one = all_one && v == 1;
    all_zero = all_zero && v == 0;
  }
  auto kind = all_one ? QuotientRing::Kind::SL2 : all_zero ? QuotientRing::Kind::Horocycle : QuotientRing::Kind::Custom;
  return QuotientRing(r.names, rel, kind);
}

namespace detail {

/// Fields sum c_j m_j d_i with m_j from `coeff_monomials`, subject to
/// ring.normal_form(theta(rel)) = 0.
inline std::vector<WeylOp> derivations_with_coefficients(const QuotientRing& ring, const std::vector<Monomial>& coeff_monomials) {
  const std::size_t n = ring.arity();
  std::vector<WeylOp> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& m : coeff_monomials) {
      WeylOp op(n);
      op.add_term(m, Monomial::unit(n, i), Rational(1));
      basis.push_back(std::move(op));
    }
  std::vector<Poly> images;
  for (const auto& b : basis) images.push_back(ring.normal_form(apply(b, ring.relation())));
  std::vector<WeylOp> out;
  for (const auto& v : nullspace(images_matrix(images))) {
    WeylOp op(n);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) op += basis[j] * v[j];
    out.push_back(std::move(op));
  }
  return out;
}

inline std::vector<Monomial> filtered_piece_monomials(const FilteredAlgebra& a, long lambda) {
  std::vector<Monomial> out;
  if (lambda < 0) return out;
  for (const auto& p : a.spanning_set(LevelValue::of(lambda))) out.push_back(p.leading_monomial());
  return out;
}

inline Poly det_poly() { return QuotientRing::det_minus(0); }

}  // namespace detail

/// Basis of Derv(A)_{<=n} for O(SL2): coefficients range over A_{<=n+1}.
inline std::vector<WeylOp> filtered_derivations(const FilteredAlgebra& a, long n) {
  return detail::derivations_with_coefficients(a.ring, detail::filtered_piece_monomials(a, n + 1));
}

/// Basis of the degree-n derivations of O(Y) = Q[a,b,c,d]/(ad-bc).
inline std::vector<WeylOp> graded_derivations_horocycle(long n) {
  QuotientRing y = QuotientRing::horocycle();
  if (n + 1 < 0) return {};
  return detail::derivations_with_coefficients(y, y.normal_monomials_of_degree(static_cast<int>(n + 1)));
}

/// tau(theta t^lambda): each coefficient theta(a_i) in A_{<= lambda + 1} is
/// written in Rees degree lambda + 1 by homogenizing with z = AD - BC.
inline WeylOp tau_map(const ReesPresentation& r, const FilteredDerivation& d) {
  if (d.level.is_bottom()) return WeylOp(r.arity());
  long target = d.level.scalar() + r.levels[0].scalar();
  Poly z = detail::det_poly();
  auto coeffs = field_coefficients(d.field);
  std::vector<Poly> lifted;
  for (const auto& c : coeffs) {
    Poly h(r.arity());
    for (const auto& [m, v] : c.terms()) {
      long gap = target - m.degree();
      if (gap < 0 || gap % r.order.generators()[0][0] != 0) throw std::invalid_argument("tau_map: coefficient not in the filtered piece");
      h += z.pow(static_cast<unsigned>(gap / 2)).times_monomial(m, v);
    }
    lifted.push_back(std::move(h));
  }
  return WeylOp::vector_field(lifted);
}

/// Degreewise: for each level n with coefficient degree n+1 <= bound,
/// tau maps Derv(O(SL2))_{<=n} injectively onto the relative derivations of
/// Rees of degree n, and every image kills z.
inline CheckReport tau_check(int bound) {
  CheckReport rep;
  rep.check = "tau";
  rep.parameters = {{"bound", bound}};
  auto a = FilteredAlgebra::sl2_peter_weyl();
  auto r = rees_build(a);
  Poly z = detail::det_poly();
  for (long n = -1; n + 1 <= bound; ++n) {
    auto derv = filtered_derivations(a, n);
    std::vector<WeylOp> images;
    bool relative = true;
    for (const auto& theta : derv) {
      WeylOp t = tau_map(r, {theta, LevelValue::of(n)});
      relative = relative && is_relative(t, z);
      images.push_back(std::move(t));
    }
    std::size_t rank = operator_span_rank(images);
    std::size_t rel_dim = relative_fields_of_degree(z, static_cast<int>(n + 1)).size();
    std::string lvl = "level " + std::to_string(n);
    rep.add(lvl + ": tau images relative", true, relative, relative);
    rep.add_eq(lvl + ": tau injective (rank = dim Derv_<=n)", derv.size(), rank);
    rep.add_eq(lvl + ": dim Derv_<=n = dim relative Rees fields", rel_dim, derv.size());
  }
  return rep;
}

/// Degreewise: dim Derv(O(SL2))_{<=n} / Derv_{<=n-2} against the
/// degree-n derivations of O(Y), for |n| <= level_bound.
inline CheckReport gr_derivations_check(int level_bound) {
  CheckReport rep;
  rep.check = "grderv";
  rep.parameters = {{"bound", level_bound}};
  auto a = FilteredAlgebra::sl2_peter_weyl();
  for (long n = -level_bound; n <= level_bound; ++n) {
    std::size_t top = n + 1 >= 0 ? filtered_derivations(a, n).size() : 0;
    std::size_t below = n - 1 >= 0 ? filtered_derivations(a, n - 2).size() : 0;
    std::size_t gr = top - below;
    std::size_t y = graded_derivations_horocycle(n).size();
    rep.add_eq("level " + std::to_string(n) + ", coefficient degree " + std::to_string(n + 1) + ": dim gr Derv(O(SL2)) vs dim Derv(O(Y))", gr, y);
  }
  return rep;
}

/// Filtered dimension tables of the fibers at z = 1 and z = 0 against
/// O(SL2) and gr O(SL2) = O(Y), degrees 0..bound.
inline CheckReport rees_fiber_check(int bound) {
  CheckReport rep;
  rep.check = "rees";
  rep.parameters = {{"bound", bound}};
  auto a = FilteredAlgebra::sl2_peter_weyl();
  auto r = rees_build(a);
  QuotientRing one = rees_fiber(r, {Rational(1)});
  QuotientRing zero = rees_fiber(r, {Rational(0)});
  QuotientRing y = QuotientRing::horocycle();
  auto image_rank = [](const QuotientRing& ring, int lambda) {
    MonomialIndex idx;
    SparseEchelon ech;
    for (const auto& m : monomials_of_degree(ring.arity(), lambda)) ech.insert(idx.coords(ring.normal_form(Poly::term(m, Rational(1)))));
    return ech.rank();
  };
  auto filtered_dim = [&](long lambda) { return lambda < 0 ? std::size_t{0} : a.spanning_set(LevelValue::of(lambda)).size(); };
  for (int lambda = 0; lambda <= bound; ++lambda) {
    std::string l = std::to_string(lambda);
    rep.add_eq("z=1: dim of Rees degree " + l + " in fiber vs dim O(SL2)_<=" + l, filtered_dim(lambda), image_rank(one, lambda));
    std::size_t gr = filtered_dim(lambda) - filtered_dim(lambda - 2);
    rep.add_eq("z=0: dim of Rees degree " + l + " in fiber vs dim gr_" + l + " O(SL2)", gr, image_rank(zero, lambda));
    rep.add_eq("z=0: dim gr_" + l + " O(SL2) vs dim O(Y)_" + l, y.normal_monomials_of_degree(lambda).size(), gr);
  }
  Poly rel1 = r.specialize({Rational(1)});
  rep.add("z=1 relation is ad-bc-1", true, rel1 == QuotientRing::det_minus(1), rel1 == QuotientRing::det_minus(1));
  Poly rel0 = r.specialize({Rational(0)});
  rep.add("z=0 relation is ad-bc", true, rel0 == QuotientRing::det_minus(0), rel0 == QuotientRing::det_minus(0));
  return rep;
}

}  // namespace vinberg
