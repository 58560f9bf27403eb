#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vinberg/exactalg/linalg.hpp"
#include "vinberg/exactalg/serialize.hpp"

namespace vinberg {

/// Finite-dimensional Lie algebra given by structure constants:
/// [x_i, x_j] = sum_k c[i][j][k] x_k.
class LieAlgebraDesc {
 public:
  using Constants = std::vector<std::vector<QVector>>;

  LieAlgebraDesc(std::vector<std::string> names, Constants c) : names_(std::move(names)), c_(std::move(c)) {
    validate();
  }

  /// sl2 with basis order F < H < E: [E,F] = H, [H,E] = 2E, [H,F] = -2F.
  static LieAlgebraDesc sl2() {
    LieAlgebraDesc g = zero({"F", "H", "E"});
    g.set_bracket(kE, kF, {{kH, 1}});
    g.set_bracket(kH, kE, {{kE, 2}});
    g.set_bracket(kH, kF, {{kF, -2}});
    g.validate();
    return g;
  }

  static constexpr std::size_t kF = 0, kH = 1, kE = 2;

  /// g (+) h with basis (g-basis, h-basis); names get suffixes.
  static LieAlgebraDesc direct_sum(const LieAlgebraDesc& g, const LieAlgebraDesc& h,
                                   const std::string& left_suffix = "1", const std::string& right_suffix = "2") {
    std::vector<std::string> names;
    for (const auto& n : g.names_) names.push_back(n + left_suffix);
    for (const auto& n : h.names_) names.push_back(n + right_suffix);
    LieAlgebraDesc s = zero(names);
    std::size_t p = g.dim();
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        for (std::size_t k = 0; k < g.dim(); ++k) s.c_[i][j][k] = g.c_[i][j][k];
    for (std::size_t i = 0; i < h.dim(); ++i)
      for (std::size_t j = 0; j < h.dim(); ++j)
        for (std::size_t k = 0; k < h.dim(); ++k) s.c_[p + i][p + j][p + k] = h.c_[i][j][k];
    s.validate();
    return s;
  }

  /// Abelian Lie algebra with the given basis names.
  static LieAlgebraDesc abelian(std::vector<std::string> names) { return zero(std::move(names)); }

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const QVector& bracket_of_basis(std::size_t i, std::size_t j) const { return c_[i][j]; }
  const Constants& constants() const { return c_; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw std::invalid_argument("unknown basis element: " + name);
  }

  QVector basis_vector(std::size_t i) const {
    QVector v(dim(), Rational(0));
    v.at(i) = 1;
    return v;
  }

  QVector bracket(const QVector& x, const QVector& y) const {
    QVector out(dim(), Rational(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) continue;
        Rational s = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (c_[i][j][k] != 0) out[k] += s * c_[i][j][k];
      }
    }
    return out;
  }

  friend bool operator==(const LieAlgebraDesc& a, const LieAlgebraDesc& b) {
    return a.names_ == b.names_ && a.c_ == b.c_;
  }

  /// {"basis": [...], "brackets": [{"i": .., "j": .., "k": .., "c": "p/q"}]}
  /// listing nonzero c[i][j][k] for i < j.
  json to_json() const {
    json br = json::array();
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k)
          if (c_[i][j][k] != 0) br.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", to_string(c_[i][j][k])}});
    return {{"basis", names_}, {"brackets", br}};
  }

  static LieAlgebraDesc from_json(const json& j) {
    LieAlgebraDesc g = zero(j.at("basis").get<std::vector<std::string>>());
    for (const auto& e : j.at("brackets")) {
      std::size_t a = e.at("i"), b = e.at("j"), k = e.at("k");
      if (a >= g.dim() || b >= g.dim() || k >= g.dim()) throw ParseError("bracket index out of range");
      Rational c = rational_from_json(e.at("c"));
      g.c_[a][b][k] = c;
      g.c_[b][a][k] = -c;
    }
    g.validate();
    return g;
  }

 private:
  static LieAlgebraDesc zero(std::vector<std::string> names) {
    std::size_t n = names.size();
    return LieAlgebraDesc(std::move(names), Constants(n, std::vector<QVector>(n, QVector(n, Rational(0)))), 0);
  }
  LieAlgebraDesc(std::vector<std::string> names, Constants c, int) : names_(std::move(names)), c_(std::move(c)) {}

  void set_bracket(std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, long>> terms) {
    for (auto [k, v] : terms) {
      c_[i][j][k] = v;
      c_[j][i][k] = -v;
    }
  }

  void validate() const {
    std::size_t n = dim();
    if (c_.size() != n) throw std::invalid_argument("structure constants: wrong shape");
    for (const auto& row : c_) {
      if (row.size() != n) throw std::invalid_argument("structure constants: wrong shape");
      for (const auto& v : row)
        if (v.size() != n) throw std::invalid_argument("structure constants: wrong shape");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (c_[i][j][k] != -c_[j][i][k]) throw std::invalid_argument("structure constants not antisymmetric");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          QVector xi = basis_vector(i), xj = basis_vector(j), xk = basis_vector(k);
          QVector s = bracket(xi, bracket(xj, xk));
          QVector t = bracket(xj, bracket(xk, xi));
          QVector u = bracket(xk, bracket(xi, xj));
          for (std::size_t m = 0; m < n; ++m)
            if (s[m] + t[m] + u[m] != 0) throw std::invalid_argument("structure constants violate Jacobi");
        }
  }

  std::vector<std::string> names_;
  Constants c_;
};

/// Subalgebra spanned by coordinate vectors in an ambient Lie algebra.
class LieSubalgebra {
 public:
  LieSubalgebra(const LieAlgebraDesc& ambient, std::vector<QVector> basis) : ambient_(ambient), basis_(std::move(basis)) {
    for (const auto& v : basis_)
      if (v.size() != ambient_.dim()) throw std::invalid_argument("LieSubalgebra: vector of wrong length");
    if (!basis_.empty() && rank(QMatrix::from_rows(basis_, ambient_.dim())) != basis_.size()) {
      throw std::invalid_argument("LieSubalgebra: basis not linearly independent");
    }
    for (const auto& x : basis_)
      for (const auto& y : basis_)
        if (!contains(ambient_.bracket(x, y))) throw std::invalid_argument("LieSubalgebra: not closed under bracket");
  }

  const LieAlgebraDesc& ambient() const { return ambient_; }
  const std::vector<QVector>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  bool contains(const QVector& v) const {
    if (basis_.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    return solve(QMatrix::from_cols(basis_, ambient_.dim()), v).has_value();
  }

  /// True iff [x, s] lies in s for every basis vector x of `other`.
  bool normalized_by(const LieSubalgebra& other) const {
    for (const auto& x : other.basis_)
      for (const auto& y : basis_)
        if (!contains(ambient_.bracket(x, y))) return false;
    return true;
  }

 private:
  LieAlgebraDesc ambient_;
  std::vector<QVector> basis_;
};

}  // namespace vinberg
