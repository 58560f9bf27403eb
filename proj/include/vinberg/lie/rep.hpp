#pragma once

#include <vector>

#include "vinberg/lie/uenv.hpp"

namespace vinberg {

inline QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// Finite-dimensional representation: one matrix per basis element.
class FinDimRep {
 public:
  FinDimRep(LieAlgebraDesc g, std::size_t dim, std::vector<QMatrix> mats)
      : g_(std::move(g)), dim_(dim), mats_(std::move(mats)) {
    validate();
  }

  const LieAlgebraDesc& lie() const { return g_; }
  std::size_t dim() const { return dim_; }
  const std::vector<QMatrix>& matrices() const { return mats_; }
  const QMatrix& matrix(std::size_t i) const { return mats_.at(i); }

  /// Matrix of a Lie algebra element given in coordinates.
  QMatrix act(const QVector& x) const {
    QMatrix out(dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) out += mats_[i] * x[i];
    return out;
  }

  /// Matrix of an element of U(g): PBW monomials act as ordered products.
  QMatrix act(const UEnvElement& u) const {
    QMatrix out(dim_, dim_);
    for (const auto& [m, c] : u.terms()) {
      QMatrix t = QMatrix::identity(dim_);
      for (std::size_t i = 0; i < g_.dim(); ++i)
        for (int e = 0; e < m[i]; ++e) t = t * mats_[i];
      out += t * c;
    }
    return out;
  }

  json to_json() const {
    json mats = json::array();
    for (const auto& m : mats_) mats.push_back(vinberg::to_json(m));
    return {{"lie", g_.to_json()}, {"dim", dim_}, {"matrices", mats}};
  }

  static FinDimRep from_json(const json& j) {
    LieAlgebraDesc g = LieAlgebraDesc::from_json(j.at("lie"));
    std::vector<QMatrix> mats;
    for (const auto& m : j.at("matrices")) mats.push_back(matrix_from_json(m));
    return FinDimRep(std::move(g), j.at("dim").get<std::size_t>(), std::move(mats));
  }

 private:
  void validate() const {
    if (mats_.size() != g_.dim()) throw std::invalid_argument("FinDimRep: one matrix per basis element required");
    for (const auto& m : mats_)
      if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("FinDimRep: matrix of wrong size");
    for (std::size_t i = 0; i < g_.dim(); ++i)
      for (std::size_t j = i + 1; j < g_.dim(); ++j)
        if (!(commutator(mats_[i], mats_[j]) == act(g_.bracket_of_basis(i, j)))) {
          throw std::invalid_argument("FinDimRep: matrices violate the bracket relations");
        }
  }

  LieAlgebraDesc g_;
  std::size_t dim_;
  std::vector<QMatrix> mats_;
};

/// V_m = Sym^m of the standard representation, basis x^(m-i) y^i (i = 0..m).
/// H is diag(m, m-2, ..., -m), E = x d/dy raises, F = y d/dx lowers.
inline FinDimRep sym_power_rep(unsigned m) {
  std::size_t n = m + 1;
  QMatrix f(n, n), h(n, n), e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = static_cast<long>(m) - 2 * static_cast<long>(i);
    if (i > 0) e(i - 1, i) = static_cast<long>(i);
    if (i + 1 < n) f(i + 1, i) = static_cast<long>(m - i);
  }
  return FinDimRep(LieAlgebraDesc::sl2(), n, {f, h, e});
}

/// Dual representation: x acts by minus the transpose.
inline FinDimRep dual_rep(const FinDimRep& v) {
  std::vector<QMatrix> mats;
  for (const auto& m : v.matrices()) mats.push_back(m.transpose() * Rational(-1));
  return FinDimRep(v.lie(), v.dim(), std::move(mats));
}

/// A representation of g (+) g' whose first `left_dim` basis elements act
/// commuting with the remaining ones.
class FinDimBimodule {
 public:
  FinDimBimodule(FinDimRep rep, std::size_t left_dim) : rep_(std::move(rep)), left_dim_(left_dim) {
    if (left_dim_ > rep_.lie().dim()) throw std::invalid_argument("FinDimBimodule: bad split");
    if (!actions_commute()) throw std::invalid_argument("FinDimBimodule: left and right actions do not commute");
  }

  const FinDimRep& rep() const { return rep_; }
  const LieAlgebraDesc& lie() const { return rep_.lie(); }
  std::size_t dim() const { return rep_.dim(); }
  std::size_t left_dim() const { return left_dim_; }

  bool actions_commute() const {
    for (std::size_t i = 0; i < left_dim_; ++i)
      for (std::size_t j = left_dim_; j < rep_.lie().dim(); ++j)
        if (!commutator(rep_.matrix(i), rep_.matrix(j)).is_zero()) return false;
    return true;
  }

 private:
  FinDimRep rep_;
  std::size_t left_dim_;
};

/// V (x) W as a module over g (+) g': (x,0) acts on V, (0,y) on W.
inline FinDimBimodule external_tensor(const FinDimRep& v, const FinDimRep& w) {
  LieAlgebraDesc s = LieAlgebraDesc::direct_sum(v.lie(), w.lie());
  QMatrix iv = QMatrix::identity(v.dim()), iw = QMatrix::identity(w.dim());
  std::vector<QMatrix> mats;
  for (const auto& m : v.matrices()) mats.push_back(kronecker(m, iw));
  for (const auto& m : w.matrices()) mats.push_back(kronecker(iv, m));
  return FinDimBimodule(FinDimRep(std::move(s), v.dim() * w.dim(), std::move(mats)), v.lie().dim());
}

/// V_m (x) V_k^* as a bimodule for sl2 (+) sl2.
inline FinDimBimodule matrix_coefficient_bimodule(unsigned m, unsigned k) {
  return external_tensor(sym_power_rep(m), dual_rep(sym_power_rep(k)));
}

}  // namespace vinberg
