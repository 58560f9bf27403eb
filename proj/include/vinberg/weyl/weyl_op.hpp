#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vinberg/exactalg/poly.hpp"
#include "vinberg/exactalg/quotient_ring.hpp"

namespace vinberg {

/// x^i falling factorial: x (x-1) ... (x-k+1). Valid for negative x, which
/// is what Laurent chart computations need.
inline Rational falling_factorial(int x, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= (x - i);
  return r;
}

inline Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

/// Key of a normal-ordered Weyl monomial x^alpha d^beta.
struct WeylKey {
  Monomial x;
  Monomial d;
  friend bool operator==(const WeylKey&, const WeylKey&) = default;
};

/// Orders by derivative part first (order, then graded lex), then by the
/// coordinate part.
struct WeylKeyLess {
  bool operator()(const WeylKey& lhs, const WeylKey& rhs) const {
    DegLexLess less;
    if (less(lhs.d, rhs.d)) return true;
    if (less(rhs.d, lhs.d)) return false;
    return less(lhs.x, rhs.x);
  }
};

/// Differential operator with polynomial coefficients in normal order:
/// every term is c * x^alpha * d^beta with coordinates left of derivatives.
class WeylOp {
 public:
  using Terms = std::map<WeylKey, Rational, WeylKeyLess>;

  WeylOp() = default;
  explicit WeylOp(std::size_t arity) : arity_(arity) {}

  static WeylOp constant(std::size_t arity, const Rational& c) {
    WeylOp op(arity);
    op.add_term(Monomial(arity), Monomial(arity), c);
    return op;
  }
  static WeylOp coordinate(std::size_t arity, std::size_t var) {
    WeylOp op(arity);
    op.add_term(Monomial::unit(arity, var), Monomial(arity), Rational(1));
    return op;
  }
  static WeylOp partial(std::size_t arity, std::size_t var) {
    WeylOp op(arity);
    op.add_term(Monomial(arity), Monomial::unit(arity, var), Rational(1));
    return op;
  }
  /// Multiplication operator by f.
  static WeylOp multiplication(const Poly& f) {
    WeylOp op(f.arity());
    for (const auto& [m, c] : f.terms()) op.add_term(m, Monomial(f.arity()), c);
    return op;
  }
  /// sum_i coeffs[i] * d_i.
  static WeylOp vector_field(const std::vector<Poly>& coeffs) {
    std::size_t n = coeffs.size();
    WeylOp op(n);
    for (std::size_t i = 0; i < n; ++i) {
      require_same_arity(n, coeffs[i].arity(), "WeylOp::vector_field");
      for (const auto& [m, c] : coeffs[i].terms()) op.add_term(m, Monomial::unit(n, i), c);
    }
    return op;
  }

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& x, const Monomial& d, const Rational& c) {
    require_same_arity(arity_, x.arity(), "WeylOp::add_term");
    require_same_arity(arity_, d.arity(), "WeylOp::add_term");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(WeylKey{x, d}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Monomial& x, const Monomial& d) const {
    auto it = terms_.find(WeylKey{x, d});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Highest total derivative degree; -1 for zero.
  int order() const {
    int o = -1;
    for (const auto& [k, c] : terms_) o = std::max(o, k.d.degree());
    return o;
  }

  /// Polynomial coefficient of d^beta.
  Poly coefficient_of(const Monomial& d) const {
    Poly out(arity_);
    for (const auto& [k, c] : terms_)
      if (k.d == d) out.add_term(k.x, c);
    return out;
  }

  /// Distinct derivative monomials present.
  std::vector<Monomial> derivative_support() const {
    std::vector<Monomial> out;
    for (const auto& [k, c] : terms_)
      if (out.empty() || !(out.back() == k.d)) out.push_back(k.d);
    return out;
  }

  bool is_vector_field() const {
    for (const auto& [k, c] : terms_)
      if (k.d.degree() != 1) return false;
    return true;
  }

  WeylOp& operator+=(const WeylOp& rhs) {
    require_same_arity(arity_, rhs.arity_, "WeylOp::operator+=");
    for (const auto& [k, c] : rhs.terms_) add_term(k.x, k.d, c);
    return *this;
  }
  WeylOp& operator-=(const WeylOp& rhs) {
    require_same_arity(arity_, rhs.arity_, "WeylOp::operator-=");
    for (const auto& [k, c] : rhs.terms_) add_term(k.x, k.d, -c);
    return *this;
  }
  WeylOp& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend WeylOp operator+(WeylOp lhs, const WeylOp& rhs) { return lhs += rhs; }
  friend WeylOp operator-(WeylOp lhs, const WeylOp& rhs) { return lhs -= rhs; }
  friend WeylOp operator-(WeylOp p) { return p *= Rational(-1); }
  friend WeylOp operator*(WeylOp p, const Rational& s) { return p *= s; }
  friend WeylOp operator*(const Rational& s, WeylOp p) { return p *= s; }

  /// f * P, multiplying every coefficient on the left.
  friend WeylOp operator*(const Poly& f, const WeylOp& p) {
    require_same_arity(f.arity(), p.arity(), "Poly * WeylOp");
    WeylOp out(p.arity());
    for (const auto& [m, c] : f.terms())
      for (const auto& [k, pc] : p.terms()) out.add_term(m * k.x, k.d, c * pc);
    return out;
  }

  friend bool operator==(const WeylOp& lhs, const WeylOp& rhs) {
    return lhs.arity_ == rhs.arity_ && lhs.terms_ == rhs.terms_;
  }

 private:
  std::size_t arity_ = 0;
  Terms terms_;
};

/// Normal-ordered product. Uses the closed Leibniz form
/// d^beta x^gamma = sum_k prod_i C(beta_i, k_i) ff(gamma_i, k_i) x^(gamma-k) d^(beta-k).
inline WeylOp weyl_mul(const WeylOp& p, const WeylOp& q) {
  require_same_arity(p.arity(), q.arity(), "weyl_mul");
  const std::size_t n = p.arity();
  WeylOp out(n);
  for (const auto& [kp, cp] : p.terms()) {
    for (const auto& [kq, cq] : q.terms()) {
      const Monomial& beta = kp.d;
      const Monomial& gamma = kq.x;
      Monomial kappa(n);
      // Enumerate 0 <= kappa <= beta componentwise.
      auto rec = [&](auto&& self, std::size_t i, Rational coef) -> void {
        if (coef == 0) return;
        if (i == n) {
          out.add_term(kp.x * (gamma / kappa), (beta / kappa) * kq.d, cp * cq * coef);
          return;
        }
        for (int k = 0; k <= beta[i]; ++k) {
          kappa.set(i, k);
          self(self, i + 1, coef * binomial(beta[i], k) * falling_factorial(gamma[i], k));
        }
        kappa.set(i, 0);
      };
      rec(rec, 0, Rational(1));
    }
  }
  return out;
}

inline WeylOp operator*(const WeylOp& lhs, const WeylOp& rhs) { return weyl_mul(lhs, rhs); }

inline WeylOp weyl_commutator(const WeylOp& p, const WeylOp& q) { return weyl_mul(p, q) - weyl_mul(q, p); }

/// Action on polynomials (Laurent monomials allowed).
inline Poly apply(const WeylOp& p, const Poly& f) {
  require_same_arity(p.arity(), f.arity(), "apply");
  const std::size_t n = p.arity();
  Poly out(n);
  for (const auto& [k, c] : p.terms()) {
    for (const auto& [m, fc] : f.terms()) {
      Rational coef = c * fc;
      for (std::size_t i = 0; i < n && coef != 0; ++i) coef *= falling_factorial(m[i], k.d[i]);
      if (coef == 0) continue;
      out.add_term(k.x * (m / k.d), coef);
    }
  }
  return out;
}

/// True iff theta(f) = 0.
inline bool is_relative(const WeylOp& theta, const Poly& f) {
  if (!theta.is_vector_field()) throw std::invalid_argument("is_relative: not a vector field");
  return apply(theta, f).is_zero();
}

inline constexpr int kDefaultIdealBound = 6;

/// True iff P maps the relation ideal of `ring` into itself. Vector fields
/// need only P(rel) in (rel); other operators are tested on g * rel for all
/// monomials g of degree <= bound.
inline bool preserves_ideal(const WeylOp& p, const QuotientRing& ring, int bound = kDefaultIdealBound) {
  require_same_arity(p.arity(), ring.arity(), "preserves_ideal");
  if (!ring.has_relation()) return true;
  const Poly& rel = ring.relation();
  if (p.is_vector_field()) return ring.in_ideal(apply(p, rel));
  if (p.order() <= 0) return true;
  for (const auto& g : monomials_up_to_degree(ring.arity(), bound)) {
    if (!ring.in_ideal(apply(p, rel.times_monomial(g, Rational(1))))) return false;
  }
  return true;
}

/// Vector fields are Weyl operators all of whose terms have order exactly one.
using VectorField = WeylOp;

/// Coefficients (theta(x_1), ..., theta(x_n)) of a vector field.
inline std::vector<Poly> field_coefficients(const WeylOp& theta) {
  if (!theta.is_vector_field() && !theta.is_zero()) throw std::invalid_argument("field_coefficients: not a vector field");
  std::vector<Poly> out;
  for (std::size_t i = 0; i < theta.arity(); ++i) out.push_back(theta.coefficient_of(Monomial::unit(theta.arity(), i)));
  return out;
}

/// The Euler operator 1 + sum_i x_i d_i.
inline WeylOp euler_operator(std::size_t arity) {
  WeylOp op = WeylOp::constant(arity, Rational(1));
  for (std::size_t i = 0; i < arity; ++i) op.add_term(Monomial::unit(arity, i), Monomial::unit(arity, i), Rational(1));
  return op;
}

}  // namespace vinberg
