#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vinberg/exactalg/poly.hpp"

namespace vinberg {

/// Polynomial ring modulo at most one relation `lead - tail`, where `lead` is
/// the relation's leading monomial. Normal forms contain no monomial divisible
/// by `lead`.
class QuotientRing {
 public:
  enum class Kind { Mat2, SL2, Horocycle, Custom };

  QuotientRing(std::vector<std::string> names, std::optional<Poly> relation, Kind kind = Kind::Custom)
      : names_(std::move(names)), kind_(kind) {
    if (relation) {
      require_same_arity(names_.size(), relation->arity(), "QuotientRing");
      if (relation->is_zero()) throw std::invalid_argument("QuotientRing: zero relation");
      Poly rel = *relation;
      rel *= Rational(1) / rel.leading_coefficient();
      if (rel.leading_monomial().is_one()) throw std::invalid_argument("QuotientRing: unit relation");
      lead_ = rel.leading_monomial();
      tail_ = -(rel - Poly::term(*lead_, Rational(1)));
      relation_ = std::move(rel);
    }
  }

  /// O(Mat2) = Q[a,b,c,d].
  static QuotientRing mat2() { return QuotientRing(abcd(), std::nullopt, Kind::Mat2); }
  /// O(SL2) = Q[a,b,c,d]/(ad-bc-1).
  static QuotientRing sl2() { return QuotientRing(abcd(), det_minus(1), Kind::SL2); }
  /// O(Y) = Q[a,b,c,d]/(ad-bc).
  static QuotientRing horocycle() { return QuotientRing(abcd(), det_minus(0), Kind::Horocycle); }

  static std::vector<std::string> abcd() { return {"a", "b", "c", "d"}; }

  /// ad - bc - k in Q[a,b,c,d].
  static Poly det_minus(long k) {
    Poly p(4);
    p.add_term(Monomial{1, 0, 0, 1}, Rational(1));
    p.add_term(Monomial{0, 1, 1, 0}, Rational(-1));
    p.add_term(Monomial(4), Rational(-k));
    return p;
  }

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  Kind kind() const { return kind_; }
  bool has_relation() const { return relation_.has_value(); }
  const Poly& relation() const { return *relation_; }
  const Monomial& lead() const { return *lead_; }
  const Poly& tail() const { return tail_; }

  bool is_normal(const Monomial& m) const { return !lead_ || !lead_->divides(m); }

  Poly normal_form(const Poly& f) const {
    require_same_arity(arity(), f.arity(), "normal_form");
    if (!lead_) return f;
    Poly out(arity());
    Poly work = f;
    std::vector<Poly> tail_powers{Poly::constant(arity(), Rational(1))};
    // Every pass strictly lowers the leading term among reducible monomials.
    while (!work.is_zero()) {
      Poly next(arity());
      for (const auto& [m, c] : work.terms()) {
        int k = lead_power(m);
        if (k == 0) {
          out.add_term(m, c);
          continue;
        }
        while (static_cast<int>(tail_powers.size()) <= k) {
          tail_powers.push_back(tail_powers.back() * tail_);
        }
        Monomial rest = m;
        for (std::size_t i = 0; i < arity(); ++i) rest.set(i, m[i] - k * (*lead_)[i]);
        next += tail_powers[k].times_monomial(rest, c);
      }
      work = std::move(next);
    }
    return out;
  }

  bool in_ideal(const Poly& f) const { return normal_form(f).is_zero(); }
  bool equal(const Poly& f, const Poly& g) const { return in_ideal(f - g); }

  /// Normal-form monomials of total degree exactly `degree`.
  std::vector<Monomial> normal_monomials_of_degree(int degree) const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(arity(), degree)) {
      if (is_normal(m)) out.push_back(m);
    }
    return out;
  }

  std::vector<Monomial> normal_monomials_up_to_degree(int degree) const {
    std::vector<Monomial> out;
    for (int d = 0; d <= degree; ++d) {
      auto part = normal_monomials_of_degree(d);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

 private:
  int lead_power(const Monomial& m) const {
    int k = -1;
    for (std::size_t i = 0; i < arity(); ++i) {
      int e = (*lead_)[i];
      if (e == 0) continue;
      int q = m[i] / e;
      if (k < 0 || q < k) k = q;
    }
    return k < 0 ? 0 : k;
  }

  std::vector<std::string> names_;
  Kind kind_;
  std::optional<Poly> relation_;
  std::optional<Monomial> lead_;
  Poly tail_;
};

inline Poly normal_form(const Poly& f, const QuotientRing& ring) { return ring.normal_form(f); }

}  // namespace vinberg
