#pragma once

#include <map>
#include <vector>

#include "vinberg/exactalg/linalg.hpp"
#include "vinberg/weyl/weyl_op.hpp"

namespace vinberg {

/// Basis m * d_i of vector fields whose coefficients are monomials of total
/// degree exactly k, ordered by (i, monomial).
inline std::vector<WeylOp> field_basis_of_degree(std::size_t arity, int k) {
  std::vector<WeylOp> out;
  for (std::size_t i = 0; i < arity; ++i)
    for (const auto& m : monomials_of_degree(arity, k)) {
      WeylOp op(arity);
      op.add_term(m, Monomial::unit(arity, i), Rational(1));
      out.push_back(std::move(op));
    }
  return out;
}

/// Coordinates of polynomials in a common monomial index, built on demand.
class MonomialIndex {
 public:
  std::size_t index(const Monomial& m) {
    auto [it, inserted] = map_.try_emplace(m, map_.size());
    return it->second;
  }
  std::size_t size() const { return map_.size(); }
  SparseEchelon::SparseVec coords(const Poly& p) {
    SparseEchelon::SparseVec v;
    for (const auto& [m, c] : p.terms()) v.emplace(index(m), c);
    return v;
  }

 private:
  std::map<Monomial, std::size_t, DegLexLess> map_;
};

/// Matrix (rows = monomials of the images, cols = inputs) of a linear map
/// given by its images.
inline QMatrix images_matrix(const std::vector<Poly>& images) {
  MonomialIndex idx;
  std::vector<SparseEchelon::SparseVec> cols;
  for (const auto& p : images) cols.push_back(idx.coords(p));
  QMatrix m(idx.size(), images.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : cols[j]) m(r, j) = c;
  return m;
}

/// Basis of the fields with homogeneous degree-k coefficients killing f.
inline std::vector<WeylOp> relative_fields_of_degree(const Poly& f, int k) {
  auto basis = field_basis_of_degree(f.arity(), k);
  std::vector<Poly> images;
  for (const auto& b : basis) images.push_back(apply(b, f));
  std::vector<WeylOp> out;
  for (const auto& v : nullspace(images_matrix(images))) {
    WeylOp op(f.arity());
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) op += basis[j] * v[j];
    out.push_back(std::move(op));
  }
  return out;
}

/// Coefficient-vector coordinates of operators, for rank computations.
inline std::size_t operator_span_rank(const std::vector<WeylOp>& ops) {
  std::map<WeylKey, std::size_t, WeylKeyLess> idx;
  SparseEchelon ech;
  for (const auto& op : ops) {
    SparseEchelon::SparseVec v;
    for (const auto& [k, c] : op.terms()) v.emplace(idx.try_emplace(k, idx.size()).first->second, c);
    ech.insert(v);
  }
  return ech.rank();
}

}  // namespace vinberg
