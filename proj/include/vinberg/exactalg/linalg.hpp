#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vinberg/exactalg/rational.hpp"

namespace vinberg {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  Matrix& operator+=(const Matrix& rhs) {
    check_shape(rhs, "Matrix::operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    check_shape(rhs, "Matrix::operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix m, const T& s) { return m *= s; }
  friend Matrix operator*(const T& s, Matrix m) { return m *= s; }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const T& a = lhs(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
        }
      }
    }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }
  static Matrix from_cols(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
  }

 private:
  void check_shape(const Matrix& rhs, const char* where) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument(std::string(where) + ": shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

inline QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

/// Rank by fraction-free (Bareiss) elimination over the integers after
/// clearing denominators row by row.
inline std::size_t rank_bareiss(const QMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      if (m(r, c) != 0) l = lcm(l, Integer(m(r, c).get_den()));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]);
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over Q.
inline Echelon rref(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    }
    Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(r, k) != 0) m(i, k) -= f * m(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

/// Basis of {v : m v = 0}, one vector per free column.
inline std::vector<QVector> nullspace(const QMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of {w : w^T m = 0}.
inline std::vector<QVector> left_nullspace(const QMatrix& m) { return nullspace(m.transpose()); }

/// Some solution of m x = b, or nullopt when inconsistent.
inline std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

/// Right inverse of a full-row-rank matrix.
inline QMatrix right_inverse(const QMatrix& m) {
  QMatrix out(m.cols(), m.rows());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    QVector e(m.rows(), Rational(0));
    e[j] = 1;
    auto x = solve(m, e);
    if (!x) throw std::domain_error("right_inverse: matrix is not of full row rank");
    for (std::size_t i = 0; i < m.cols(); ++i) out(i, j) = (*x)[i];
  }
  return out;
}

/// Incremental echelon basis of sparse vectors. Each stored row has its
/// pivot as its first nonzero column, normalized to 1.
class SparseEchelon {
 public:
  using SparseVec = std::map<std::size_t, Rational>;

  /// Reduces `v` against the stored rows; returns the remainder.
  SparseVec reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Rational f = it->second;
      std::size_t col = it->first;
      // The row's pivot entry is 1, so column `col` cancels here.
      for (const auto& [k, x] : row->second) {
        auto [slot, inserted] = v.try_emplace(k, Rational(0));
        slot->second -= f * x;
        if (slot->second == 0) v.erase(slot);
      }
      it = v.upper_bound(col);
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Adds `v`; returns true iff it was independent of the stored rows.
  bool insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Rational inv = 1 / r.begin()->second;
    for (auto& [k, x] : r) x *= inv;
    std::size_t p = r.begin()->first;
    rows_.emplace(p, std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, SparseVec> rows_;
};

inline SparseEchelon::SparseVec to_sparse(const QVector& v) {
  SparseEchelon::SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace(i, v[i]);
  return out;
}

/// Characteristic polynomial det(xI - m), coefficients from constant term up.
inline std::vector<Rational> char_poly(const QMatrix& m) {
  // Faddeev-LeVerrier; exact over Q.
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  std::vector<Rational> coeff(n + 1, Rational(0));
  coeff[n] = 1;
  QMatrix mk(n, n);
  QMatrix id = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + coeff[n - k + 1] * id;
    QMatrix amk = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    coeff[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return coeff;
}

}  // namespace vinberg
