#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vinberg/exactalg/monomial.hpp"
#include "vinberg/exactalg/rational.hpp"

namespace vinberg {

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// in graded-lex order, so the last entry is the leading term. Zero
/// coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, DegLexLess>;

  Poly() = default;
  explicit Poly(std::size_t arity) : arity_(arity) {}

  static Poly constant(std::size_t arity, const Rational& c) {
    Poly p(arity);
    p.add_term(Monomial(arity), c);
    return p;
  }
  static Poly variable(std::size_t arity, std::size_t var) {
    return term(Monomial::unit(arity, var), Rational(1));
  }
  static Poly term(const Monomial& m, const Rational& c) {
    Poly p(m.arity());
    p.add_term(m, c);
    return p;
  }

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c) {
    require_same_arity(arity_, m.arity(), "Poly::add_term");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Highest total degree present; -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  int min_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
      if (best < 0 || m.degree() < best) best = m.degree();
    }
    return best;
  }

  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
      if (m.degree() != d) return false;
    }
    return true;
  }

  Poly homogeneous_part(int degree) const {
    Poly out(arity_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() == degree) out.terms_.emplace(m, c);
    }
    return out;
  }

  Poly& operator+=(const Poly& rhs) {
    require_same_arity(arity_, rhs.arity_, "Poly::operator+=");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& rhs) {
    require_same_arity(arity_, rhs.arity_, "Poly::operator-=");
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator-(Poly p) { return p *= Rational(-1); }
  friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
  friend Poly operator*(const Rational& s, Poly p) { return p *= s; }

  friend Poly operator*(const Poly& lhs, const Poly& rhs) {
    require_same_arity(lhs.arity_, rhs.arity_, "Poly::operator*");
    Poly out(lhs.arity_);
    for (const auto& [ml, cl] : lhs.terms_) {
      for (const auto& [mr, cr] : rhs.terms_) out.add_term(ml * mr, cl * cr);
    }
    return out;
  }

  Poly times_monomial(const Monomial& m, const Rational& c) const {
    Poly out(arity_);
    if (c == 0) return out;
    for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm * m, cc * c);
    return out;
  }

  Poly pow(unsigned e) const {
    Poly out = constant(arity_, Rational(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  Rational evaluate(std::span<const Rational> point) const {
    require_same_arity(arity_, point.size(), "Poly::evaluate");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (std::size_t i = 0; i < arity_; ++i) {
        int e = m[i];
        if (e < 0) throw std::domain_error("evaluate: Laurent monomial");
        for (int k = 0; k < e; ++k) v *= point[i];
      }
      total += v;
    }
    return total;
  }

  /// Substitutes polynomials (all of the same target arity) for each variable.
  Poly substitute(std::span<const Poly> images) const {
    require_same_arity(arity_, images.size(), "Poly::substitute");
    std::size_t target = images.empty() ? 0 : images.front().arity();
    Poly out(target);
    std::vector<std::vector<Poly>> powers(arity_);
    for (const auto& [m, c] : terms_) {
      Poly t = constant(target, c);
      for (std::size_t i = 0; i < arity_; ++i) {
        int e = m[i];
        if (e < 0) throw std::domain_error("substitute: Laurent monomial");
        if (e == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(target, Rational(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        t = t * cache[e];
      }
      out += t;
    }
    return out;
  }

  friend bool operator==(const Poly& lhs, const Poly& rhs) {
    return lhs.arity_ == rhs.arity_ && lhs.terms_ == rhs.terms_;
  }

 private:
  std::size_t arity_ = 0;
  Terms terms_;
};

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

/// Multivariate division by a single polynomial with respect to graded-lex.
/// With one divisor the remainder is zero exactly when `divisor` divides `f`.
inline DivisionResult divide(const Poly& f, const Poly& divisor) {
  require_same_arity(f.arity(), divisor.arity(), "divide");
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Monomial& lead = divisor.leading_monomial();
  const Rational& lc = divisor.leading_coefficient();
  DivisionResult out{Poly(f.arity()), Poly(f.arity())};
  Poly work = f;
  while (!work.is_zero()) {
    Monomial m = work.leading_monomial();
    Rational c = work.leading_coefficient();
    if (lead.divides(m)) {
      Monomial q = m / lead;
      Rational qc = c / lc;
      out.quotient.add_term(q, qc);
      work -= divisor.times_monomial(q, qc);
    } else {
      out.remainder.add_term(m, c);
      work.add_term(m, -c);
    }
  }
  return out;
}

inline std::optional<Poly> exact_quotient(const Poly& f, const Poly& divisor) {
  auto r = divide(f, divisor);
  if (!r.remainder.is_zero()) return std::nullopt;
  return std::move(r.quotient);
}

}  // namespace vinberg
