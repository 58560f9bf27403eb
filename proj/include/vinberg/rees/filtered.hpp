#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "vinberg/exactalg/level.hpp"
#include "vinberg/rees/lattice.hpp"
#include "vinberg/weyl/weyl_op.hpp"

namespace vinberg {

/// Raised when the levels involved have no least common dominating point.
/// `antichain` holds the minimal dominating points (empty if there are none).
class LevelAntichainError : public std::runtime_error {
 public:
  LevelAntichainError(const std::string& what, std::vector<LevelValue> antichain)
      : std::runtime_error(what), antichain(std::move(antichain)) {}
  std::vector<LevelValue> antichain;
};

/// A quotient ring with a lattice filtration. `components` splits an element
/// into pieces that each lie in a single filtered piece and returns their
/// levels; f is in A_{<=lambda} iff every component level is <= lambda.
struct FilteredAlgebra {
  QuotientRing ring;
  LatticeOrder order;
  std::vector<LevelValue> generator_levels;
  std::function<std::vector<LevelValue>(const Poly&)> components;

  /// O(SL2) with the Peter-Weyl filtration by dominance in the weight lattice.
  /// Components are the degree-parity parts; each generator has level 1.
  static FilteredAlgebra sl2_peter_weyl() {
    QuotientRing ring = QuotientRing::sl2();
    return {ring, LatticeOrder::sl2(), std::vector<LevelValue>(4, LevelValue::of(1)), [ring](const Poly& f) {
              std::vector<LevelValue> out;
              for (const auto& l : pw_level_profile(f, ring))
                if (!l.is_bottom()) out.push_back(l);
              return out;
            }};
  }

  bool contains(const Poly& f, const LevelValue& lambda) const {
    for (const auto& l : components(f))
      if (!order.leq(l, lambda)) return false;
    return true;
  }

  /// Least lambda with f in A_{<=lambda}; BOTTOM for f = 0.
  LevelValue level(const Poly& f) const {
    auto comps = components(f);
    if (comps.empty()) return LevelValue::bot();
    return least_dominating(comps, "level");
  }

  LevelValue least_dominating(const std::vector<LevelValue>& pts, const char* who) const {
    std::vector<std::vector<long>> raw;
    for (const auto& p : pts)
      if (!p.is_bottom()) raw.push_back(p.value);
    if (raw.empty()) return LevelValue::bot();
    auto ub = order.minimal_upper_bounds(raw);
    if (ub.size() != 1) {
      std::vector<LevelValue> chain;
      for (auto& u : ub) chain.push_back(LevelValue::of(u));
      throw LevelAntichainError(std::string(who) + ": no least dominating level", chain);
    }
    return LevelValue::of(ub[0]);
  }

  /// Spanning set of A_{<=lambda} for SL2: monomials of degree lambda, lambda-2, ...
  std::vector<Poly> spanning_set(const LevelValue& lambda) const {
    std::vector<Poly> out;
    if (lambda.is_bottom()) return out;
    long top = lambda.scalar();
    for (long k = top; k >= 0; k -= order.generators()[0][0])
      for (const auto& m : ring.normal_monomials_of_degree(static_cast<int>(k))) out.push_back(Poly::term(m, Rational(1)));
    return out;
  }
};

/// A vector field on a filtered algebra together with its certified level.
struct FilteredDerivation {
  WeylOp field;
  LevelValue level;
};

/// Least n with theta(a_i) in A_{<= g_i + n} for every generator a_i.
/// Throws LevelAntichainError when no least such n exists.
inline LevelValue derivation_level(const FilteredAlgebra& a, const WeylOp& theta) {
  if (!theta.is_vector_field()) throw std::invalid_argument("derivation_level: not a vector field");
  if (!preserves_ideal(theta, a.ring)) throw std::invalid_argument("derivation_level: field does not preserve the relation ideal");
  auto coeffs = field_coefficients(theta);
  std::vector<LevelValue> shifted;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& l : a.components(coeffs[i])) shifted.push_back(LevelValue::of(a.order.sub(l.value, a.generator_levels[i].value)));
  }
  return a.least_dominating(shifted, "derivation_level");
}

inline FilteredDerivation make_filtered_derivation(const FilteredAlgebra& a, const WeylOp& theta) {
  return {theta, derivation_level(a, theta)};
}

/// Levels n(x) - mu over a spanning set of each A_{<=mu}, mu up to `bound`:
/// the raw data for the least n with P(A_{<=mu}) in A_{<=mu+n}.
inline std::vector<LevelValue> operator_level_shifts(const FilteredAlgebra& a, const WeylOp& p, int bound) {
  std::vector<LevelValue> shifts;
  for (long mu = 0; mu <= bound; ++mu) {
    for (const auto& x : a.spanning_set(LevelValue::of(mu))) {
      Poly y = a.ring.normal_form(apply(p, x));
      for (const auto& l : a.components(y)) shifts.push_back(LevelValue::of(l.scalar() - mu));
    }
  }
  return shifts;
}

/// Least n, in dominance order, with P(A_{<=mu}) in A_{<=mu+n} for mu <= bound.
inline LevelValue operator_level(const FilteredAlgebra& a, const WeylOp& p, int bound) {
  return a.least_dominating(operator_level_shifts(a, p, bound), "operator_level");
}

/// True iff P(A_{<=mu}) is inside A_{<=mu+lambda} for every mu <= bound.
inline bool maps_within(const FilteredAlgebra& a, const WeylOp& p, const LevelValue& lambda, int bound) {
  for (long mu = 0; mu <= bound; ++mu) {
    LevelValue target = lambda.is_bottom() ? LevelValue::bot() : LevelValue::of(mu + lambda.scalar());
    for (const auto& x : a.spanning_set(LevelValue::of(mu))) {
      Poly y = apply(p, x);
      if (target.is_bottom()) {
        if (!a.ring.normal_form(y).is_zero()) return false;
      } else if (!a.contains(y, target)) {
        return false;
      }
    }
  }
  return true;
}

/// The certified level holds on spanning sets up to `bound` and fails one
/// generator lower.
inline bool level_is_tight(const FilteredAlgebra& a, const FilteredDerivation& d, int bound) {
  if (d.level.is_bottom()) return maps_within(a, d.field, d.level, bound);
  if (!maps_within(a, d.field, d.level, bound)) return false;
  LevelValue lower = LevelValue::of(a.order.sub(d.level.value, a.order.generators()[0]));
  return !maps_within(a, d.field, lower, bound);
}

}  // namespace vinberg
