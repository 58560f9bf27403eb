#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "vinberg/exactalg/poly.hpp"
#include "vinberg/lie/lie_algebra.hpp"

namespace vinberg {

class UEnv;

/// Element of U(g) in PBW normal form: a linear combination of ordered
/// monomials x_0^e0 x_1^e1 ... stored as exponent vectors.
class UEnvElement {
 public:
  UEnvElement() = default;
  UEnvElement(std::shared_ptr<const UEnv> alg, Poly terms) : alg_(std::move(alg)), terms_(std::move(terms)) {}

  const std::shared_ptr<const UEnv>& algebra() const { return alg_; }
  const Poly::Terms& terms() const { return terms_.terms(); }
  const Poly& as_poly() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  /// PBW degree (length of the longest word); -1 for zero.
  int degree() const { return terms_.total_degree(); }

  UEnvElement& operator+=(const UEnvElement& rhs) {
    check(rhs);
    terms_ += rhs.terms_;
    return *this;
  }
  UEnvElement& operator-=(const UEnvElement& rhs) {
    check(rhs);
    terms_ -= rhs.terms_;
    return *this;
  }
  UEnvElement& operator*=(const Rational& s) {
    terms_ *= s;
    return *this;
  }
  friend UEnvElement operator+(UEnvElement a, const UEnvElement& b) { return a += b; }
  friend UEnvElement operator-(UEnvElement a, const UEnvElement& b) { return a -= b; }
  friend UEnvElement operator-(UEnvElement a) { return a *= Rational(-1); }
  friend UEnvElement operator*(UEnvElement a, const Rational& s) { return a *= s; }
  friend UEnvElement operator*(const Rational& s, UEnvElement a) { return a *= s; }
  friend UEnvElement operator*(const UEnvElement& a, const UEnvElement& b);

  friend bool operator==(const UEnvElement& a, const UEnvElement& b) { return a.terms_ == b.terms_; }

 private:
  void check(const UEnvElement& rhs) const {
    if (alg_ != rhs.alg_) throw std::invalid_argument("UEnvElement: elements of different algebras");
  }

  std::shared_ptr<const UEnv> alg_;
  Poly terms_;
};

/// The universal enveloping algebra of a Lie algebra, with PBW rewriting
/// x_j x_i -> x_i x_j + [x_j, x_i] for j > i. Products of a generator with a
/// PBW monomial are memoized; the cache is internally synchronized.
class UEnv : public std::enable_shared_from_this<UEnv> {
 public:
  static std::shared_ptr<const UEnv> make(LieAlgebraDesc g) {
    return std::shared_ptr<const UEnv>(new UEnv(std::move(g)));
  }

  const LieAlgebraDesc& lie() const { return g_; }
  std::size_t dim() const { return g_.dim(); }

  UEnvElement zero() const { return UEnvElement(self(), Poly(dim())); }
  UEnvElement one() const { return scalar(Rational(1)); }
  UEnvElement scalar(const Rational& c) const { return UEnvElement(self(), Poly::constant(dim(), c)); }
  UEnvElement generator(std::size_t i) const { return UEnvElement(self(), Poly::variable(dim(), i)); }
  UEnvElement from_vector(const QVector& v) const {
    Poly p(dim());
    for (std::size_t i = 0; i < dim(); ++i) p.add_term(Monomial::unit(dim(), i), v[i]);
    return UEnvElement(self(), p);
  }
  /// The PBW monomial with the given exponent vector.
  UEnvElement monomial(const Monomial& m) const { return UEnvElement(self(), Poly::term(m, Rational(1))); }

  /// Normal form of coef * x_{w0} x_{w1} ... x_{wk}.
  UEnvElement pbw_normal_form(const std::vector<std::size_t>& word, const Rational& coef = Rational(1)) const {
    Poly acc = Poly::constant(dim(), coef);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it >= dim()) throw std::out_of_range("pbw_normal_form: index out of range");
      acc = left_mul(*it, acc);
    }
    return UEnvElement(self(), acc);
  }

  UEnvElement mul(const UEnvElement& a, const UEnvElement& b) const {
    Poly out(dim());
    for (const auto& [m, c] : a.terms()) {
      Poly acc = b.as_poly() * c;
      // x^m = x_0^{m0} ... x_{n-1}^{m_{n-1}}; apply the rightmost letter first.
      for (std::size_t i = dim(); i-- > 0;)
        for (int e = 0; e < m[i]; ++e) acc = left_mul(i, acc);
      out += acc;
    }
    return UEnvElement(self(), out);
  }

  UEnvElement commutator(const UEnvElement& a, const UEnvElement& b) const { return mul(a, b) - mul(b, a); }

  bool is_central(const UEnvElement& u) const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (!commutator(u, generator(i)).is_zero()) return false;
    return true;
  }

  /// x_i * f for f in PBW normal form.
  Poly left_mul(std::size_t i, const Poly& f) const {
    Poly out(dim());
    for (const auto& [m, c] : f.terms()) out += left_mul_monomial(i, m) * c;
    return out;
  }

 private:
  explicit UEnv(LieAlgebraDesc g) : g_(std::move(g)) {}

  std::shared_ptr<const UEnv> self() const { return shared_from_this(); }

  const Poly& left_mul_monomial(std::size_t i, const Monomial& m) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find({i, m});
      if (it != cache_.end()) return it->second;
    }
    Poly result = compute_left_mul(i, m);
    std::lock_guard<std::mutex> lock(mu_);
    // std::map never invalidates references on insertion.
    return cache_.try_emplace({i, m}, std::move(result)).first->second;
  }

  Poly compute_left_mul(std::size_t i, const Monomial& m) const {
    std::size_t j = 0;
    while (j < dim() && m[j] == 0) ++j;
    if (j >= i) {
      Monomial out = m;
      out.set(i, m[i] + 1);
      return Poly::term(out, Rational(1));
    }
    // x_i x_j rest = x_j (x_i rest) + [x_i, x_j] rest, with j < i.
    Monomial rest = m;
    rest.set(j, m[j] - 1);
    Poly first = left_mul(j, left_mul_monomial(i, rest));
    Poly second(dim());
    const QVector& br = g_.bracket_of_basis(i, j);
    for (std::size_t k = 0; k < dim(); ++k)
      if (br[k] != 0) second += left_mul_monomial(k, rest) * br[k];
    return first + second;
  }

  LieAlgebraDesc g_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, Monomial>, Poly> cache_;
};

inline UEnvElement operator*(const UEnvElement& a, const UEnvElement& b) {
  a.check(b);
  if (!a.alg_) throw std::invalid_argument("UEnvElement: null algebra");
  return a.alg_->mul(a, b);
}

/// U(sl2) with basis F < H < E.
inline std::shared_ptr<const UEnv> uenv_sl2() { return UEnv::make(LieAlgebraDesc::sl2()); }

/// U(sl2) (x) U(sl2) = U(sl2 (+) sl2), basis F1 H1 E1 F2 H2 E2.
inline std::shared_ptr<const UEnv> uenv_sl2_pair() {
  return UEnv::make(LieAlgebraDesc::direct_sum(LieAlgebraDesc::sl2(), LieAlgebraDesc::sl2()));
}

/// 1 + H^2 + 2EF + 2FE in the given copy of sl2 inside `u` (offset 0 or 3).
inline UEnvElement casimir_sl2(const std::shared_ptr<const UEnv>& u, std::size_t offset = 0) {
  auto f = offset + LieAlgebraDesc::kF, h = offset + LieAlgebraDesc::kH, e = offset + LieAlgebraDesc::kE;
  return u->one() + u->pbw_normal_form({h, h}) + u->pbw_normal_form({e, f}, 2) + u->pbw_normal_form({f, e}, 2);
}

inline UEnvElement casimir_sl2() { return casimir_sl2(uenv_sl2()); }

inline bool is_central(const UEnvElement& u) { return u.algebra()->is_central(u); }

}  // namespace vinberg
