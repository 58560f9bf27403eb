#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vinberg/exactalg/linalg.hpp"
#include "vinberg/exactalg/quotient_ring.hpp"

namespace vinberg {

/// A point of the level lattice, or BOTTOM (the level of the zero element).
struct LevelValue {
  bool bottom = true;
  std::vector<long> value;

  static LevelValue bot() { return {}; }
  static LevelValue of(std::vector<long> v) { return {false, std::move(v)}; }
  static LevelValue of(long v) { return {false, {v}}; }

  bool is_bottom() const { return bottom; }
  long scalar() const { return value.at(0); }

  friend bool operator==(const LevelValue&, const LevelValue&) = default;

  std::string to_string() const {
    if (bottom) return "BOTTOM";
    std::string s;
    if (value.size() != 1) s += "(";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(value[i]);
    }
    if (value.size() != 1) s += ")";
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const LevelValue& l) { return os << l.to_string(); }
};

namespace detail {

/// Checks that the normal-form monomials of degree <= k together with
/// rel * (monomials of degree <= k - deg(rel)) form a basis of the
/// polynomials of degree <= k. This is the coset-intersection statement
/// behind degree minimality of normal forms, proved by linear algebra that
/// never calls normal_form.
inline bool normal_form_minimality_holds(const QuotientRing& ring, int k) {
  if (!ring.has_relation()) return true;
  const std::size_t n = ring.arity();
  auto all = monomials_up_to_degree(n, k);
  std::map<Monomial, std::size_t, DegLexLess> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  int rel_deg = ring.relation().total_degree();
  SparseEchelon ech;
  std::size_t generators = 0;
  for (const auto& m : monomials_up_to_degree(n, k - rel_deg)) {
    Poly p = ring.relation().times_monomial(m, Rational(1));
    SparseEchelon::SparseVec v;
    for (const auto& [mm, c] : p.terms()) v.emplace(index.at(mm), c);
    ech.insert(v);
    ++generators;
  }
  for (const auto& m : all) {
    if (!ring.is_normal(m)) continue;
    ech.insert({{index.at(m), Rational(1)}});
    ++generators;
  }
  return generators == all.size() && ech.rank() == all.size();
}

/// Minimal degree of a representative of f's class, searched by linear
/// algebra: f + rel*h has degree <= k for some h of degree <= deg(f) - deg(rel).
inline int min_degree_by_search(const Poly& f, const QuotientRing& ring) {
  int deg = f.total_degree();
  if (!ring.has_relation()) return deg;
  if (ring.in_ideal(f)) return -1;
  const std::size_t n = ring.arity();
  int rel_deg = ring.relation().total_degree();
  auto hs = monomials_up_to_degree(n, deg - rel_deg);
  std::vector<Poly> images;
  for (const auto& m : hs) images.push_back(ring.relation().times_monomial(m, Rational(1)));
  for (int k = 0; k < deg; ++k) {
    // Unknowns: coefficients of h. Equations: coefficients above degree k vanish.
    std::map<Monomial, std::size_t, DegLexLess> rows;
    auto row_of = [&](const Monomial& m) {
      auto [it, inserted] = rows.try_emplace(m, rows.size());
      return it->second;
    };
    for (const auto& p : images)
      for (const auto& [m, c] : p.terms())
        if (m.degree() > k) row_of(m);
    for (const auto& [m, c] : f.terms())
      if (m.degree() > k) row_of(m);
    QMatrix a(rows.size(), hs.size());
    QVector b(rows.size(), Rational(0));
    for (std::size_t j = 0; j < images.size(); ++j)
      for (const auto& [m, c] : images[j].terms())
        if (m.degree() > k) a(rows.at(m), j) = c;
    for (const auto& [m, c] : f.terms())
      if (m.degree() > k) b[rows.at(m)] = -c;
    if (solve(a, b)) return k;
  }
  return deg;
}

struct MinimalityCache {
  std::once_flag once;
  bool valid = false;
};

inline constexpr int kMinimalityValidationDegree = 6;

inline bool sl2_normal_form_is_minimal() {
  static MinimalityCache cache;
  std::call_once(cache.once, [] {
    QuotientRing ring = QuotientRing::sl2();
    bool ok = true;
    for (int k = 0; k <= kMinimalityValidationDegree && ok; ++k) ok = normal_form_minimality_holds(ring, k);
    cache.valid = ok;
  });
  return cache.valid;
}

}  // namespace detail

/// Least total degree of a representative of f's class. For O(SL2) this is
/// the Peter-Weyl level (parity_step 2); for rings whose relation is
/// homogeneous, or with no relation, it is the degree of the normal form.
inline LevelValue pw_level(const Poly& f, const QuotientRing& ring, int parity_step = 2) {
  (void)parity_step;
  Poly nf = ring.normal_form(f);
  if (nf.is_zero()) return LevelValue::bot();
  if (ring.kind() == QuotientRing::Kind::SL2 && !detail::sl2_normal_form_is_minimal()) {
    return LevelValue::of(detail::min_degree_by_search(f, ring));
  }
  if (ring.kind() == QuotientRing::Kind::Custom) {
    return LevelValue::of(detail::min_degree_by_search(nf, ring));
  }
  return LevelValue::of(nf.total_degree());
}

/// Levels of the components of f's class by degree residue modulo
/// `parity_step` (the relation ad-bc-1 preserves degree parity, so the split
/// is well defined). Entry r is the level of the residue-r part.
inline std::vector<LevelValue> pw_level_profile(const Poly& f, const QuotientRing& ring, int parity_step = 2) {
  Poly nf = ring.normal_form(f);
  std::vector<Poly> parts(parity_step, Poly(ring.arity()));
  for (const auto& [m, c] : nf.terms()) parts[m.degree() % parity_step].add_term(m, c);
  std::vector<LevelValue> out;
  for (const auto& p : parts) out.push_back(pw_level(p, ring, parity_step));
  return out;
}

/// Largest m with d^m dividing f; nullopt stands for the infinite order of f = 0.
inline std::optional<unsigned> vanishing_order(const Poly& f, const Poly& d) {
  require_same_arity(f.arity(), d.arity(), "vanishing_order");
  if (f.is_zero()) return std::nullopt;
  if (d.total_degree() <= 0) throw std::invalid_argument("vanishing_order: divisor must be non-constant");
  unsigned m = 0;
  Poly cur = f;
  while (true) {
    auto q = exact_quotient(cur, d);
    if (!q) return m;
    cur = std::move(*q);
    ++m;
  }
}

}  // namespace vinberg
