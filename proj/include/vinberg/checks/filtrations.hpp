#pragma once

#include <map>
#include <string>
#include <vector>

#include "vinberg/action/action.hpp"
#include "vinberg/exactalg/serialize.hpp"
#include "vinberg/rees/filtered.hpp"
#include "vinberg/report.hpp"

namespace vinberg::checks {

/// One element measured by two independent routes.
struct FiltrationRecord {
  std::string element;
  LevelValue method1;
  LevelValue method2;
  bool equal = false;
};

struct FiltrationComparisonReport {
  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<FiltrationRecord> records;
  std::vector<CheckItem> extra;

  void add(std::string element, LevelValue m1, LevelValue m2) {
    bool eq = m1 == m2;
    records.push_back({std::move(element), std::move(m1), std::move(m2), eq});
  }

  bool pass() const {
    for (const auto& r : records)
      if (!r.equal) return false;
    for (const auto& e : extra)
      if (!e.pass) return false;
    return true;
  }

  CheckReport to_report() const {
    CheckReport rep;
    rep.check = check;
    rep.parameters = parameters;
    for (const auto& r : records) rep.add(r.element, r.method1.to_string(), r.method2.to_string(), r.equal);
    for (const auto& e : extra) rep.items.push_back(e);
    return rep;
  }
};

/// P = sum f_i mu(u_i) with f_i in O(Mat2) and u_i in U(sl2 + sl2).
struct OperatorSample {
  std::string name;
  std::vector<std::pair<Poly, UEnvElement>> terms;

  WeylOp op(const InfinitesimalAction& act) const {
    WeylOp out(4);
    for (const auto& [f, u] : terms) out += f * moment_map(u, act);
    return out;
  }
  int pbw_degree() const {
    int k = 0;
    for (const auto& t : terms) k = std::max(k, t.second.degree());
    return k;
  }
};

namespace detail {

/// Coefficients of P in the derivative basis, reduced modulo ad-bc-1. Two
/// operators tangent to SL2 induce the same operator on O(SL2) iff these agree.
inline WeylOp restrict_coefficients(const WeylOp& p, const QuotientRing& ring) {
  WeylOp out(p.arity());
  for (const auto& d : p.derivative_support()) {
    Poly nf = ring.normal_form(p.coefficient_of(d));
    for (const auto& [m, c] : nf.terms()) out.add_term(m, d, c);
  }
  return out;
}

class WeylIndex {
 public:
  SparseEchelon::SparseVec coords(const WeylOp& p) {
    SparseEchelon::SparseVec v;
    for (const auto& [k, c] : p.terms()) v.emplace(idx_.try_emplace(k, idx_.size()).first->second, c);
    return v;
  }

 private:
  std::map<WeylKey, std::size_t, WeylKeyLess> idx_;
};

inline std::vector<UEnvElement> pbw_words_up_to(const std::shared_ptr<const UEnv>& u, int k) {
  std::vector<UEnvElement> out;
  for (const auto& m : monomials_up_to_degree(u->lie().dim(), k)) out.emplace_back(u, Poly::term(m, Rational(1)));
  return out;
}

}  // namespace detail

/// Peter-Weyl side: least lambda with P in O(SL2)_{<=lambda} . mu(U_{<=pbw}),
/// decided by exact membership tests for lambda = 0..max_level.
class PeterWeylOperatorLevels {
 public:
  PeterWeylOperatorLevels(int max_level, int pbw_bound) : alg_(FilteredAlgebra::sl2_peter_weyl()) {
    auto words = detail::pbw_words_up_to(u_, pbw_bound);
    std::vector<WeylOp> images;
    for (const auto& w : words) images.push_back(moment_map(w, act_));
    for (int lam = 0; lam <= max_level; ++lam) {
      SparseEchelon ech;
      for (const auto& g : alg_.spanning_set(LevelValue::of(lam)))
        for (const auto& im : images) ech.insert(idx_.coords(detail::restrict_coefficients(g * im, alg_.ring)));
      pieces_.push_back(std::move(ech));
    }
  }

  const InfinitesimalAction& action() const { return act_; }
  const std::shared_ptr<const UEnv>& uenv() const { return u_; }

  /// BOTTOM if P restricts to zero. Throws LevelAntichainError if the
  /// levels containing P have no least element or none is in range.
  LevelValue level(const WeylOp& p) {
    WeylOp r = detail::restrict_coefficients(p, alg_.ring);
    if (r.is_zero()) return LevelValue::bot();
    auto v = idx_.coords(r);
    std::vector<LevelValue> members;
    for (std::size_t lam = 0; lam < pieces_.size(); ++lam)
      if (pieces_[lam].contains(v)) members.push_back(LevelValue::of(static_cast<long>(lam)));
    for (const auto& m : members) {
      bool least = true;
      for (const auto& o : members) least = least && alg_.order.leq(m, o);
      if (least) return m;
    }
    throw LevelAntichainError("Peter-Weyl level: no least level in range", {});
  }

 private:
  InfinitesimalAction act_ = builtin_lr_action_mat2();
  std::shared_ptr<const UEnv> u_ = uenv_sl2_pair();
  FilteredAlgebra alg_;
  detail::WeylIndex idx_;
  std::vector<SparseEchelon> pieces_;
};

/// Default sample set: the six table fields, products f mu(u) with
/// pw_level(f) <= 3, and a few degenerate cases.
inline std::vector<OperatorSample> default_operator_samples() {
  using S = Sl2Pair;
  auto u = uenv_sl2_pair();
  auto P = [](const char* t) { return parse_poly(t, QuotientRing::abcd()); };
  auto w = [&](std::vector<std::size_t> word) { return u->pbw_normal_form(word); };
  const char* names[] = {"F(x)1", "H(x)1", "E(x)1", "1(x)F", "1(x)H", "1(x)E"};
  std::vector<OperatorSample> out;
  out.push_back({"1", {{P("1"), u->one()}}});
  for (std::size_t i = 0; i < 6; ++i) out.push_back({std::string("mu(") + names[i] + ")", {{P("1"), w({i})}}});
  out.push_back({"mu(Delta(x)1)", {{P("1"), casimir_sl2(u, 0)}}});
  out.push_back({"mu(E(x)1 . 1(x)F)", {{P("1"), w({S::E1, S::F2})}}});
  out.push_back({"a mu(E(x)1)", {{P("a"), w({S::E1})}}});
  out.push_back({"b mu(1(x)H)", {{P("b"), w({S::H2})}}});
  out.push_back({"(a + d) mu(F(x)1)", {{P("a + d"), w({S::F1})}}});
  out.push_back({"c mu(F(x)1 . 1(x)E)", {{P("c"), w({S::F1, S::E2})}}});
  out.push_back({"ad mu(H(x)1)", {{P("a d"), w({S::H1})}}});
  out.push_back({"a^2 mu(1(x)F)", {{P("a^2"), w({S::F2})}}});
  out.push_back({"bc mu(E(x)1) + mu(1(x)H)", {{P("b c"), w({S::E1})}, {P("1"), w({S::H2})}}});
  out.push_back({"a^3 mu(1(x)E)", {{P("a^3"), w({S::E2})}}});
  out.push_back({"abd mu(H(x)1)", {{P("a b d"), w({S::H1})}}});
  out.push_back({"c^2 d mu(E(x)1 . 1(x)E)", {{P("c^2 d"), w({S::E1, S::E2})}}});
  out.push_back({"b^2 mu(H(x)1 H(x)1)", {{P("b^2"), w({S::H1, S::H1})}}});
  out.push_back({"(ad-bc) mu(E(x)1)", {{P("a d - b c"), w({S::E1})}}});
  out.push_back({"(ad-bc-1) mu(H(x)1)", {{P("a d - b c - 1"), w({S::H1})}}});
  out.push_back({"a mu(H(x)1) + d mu(1(x)H)", {{P("a"), w({S::H1})}, {P("d"), w({S::H2})}}});
  out.push_back({"b c d mu(F(x)1)", {{P("b c d"), w({S::F1})}}});
  return out;
}

inline constexpr int kOperatorDegreeBound = 6;

/// Peter-Weyl level of each sample against its derivations-filtration level,
/// the least n with P(O_{<=m}) in O_{<=m+n} on spanning sets with m <= bound.
inline FiltrationComparisonReport pw_vs_derivations_check(const std::vector<OperatorSample>& samples,
                                                          int degree_bound = kOperatorDegreeBound) {
  FiltrationComparisonReport rep;
  rep.check = "pwfilt";
  int max_level = 0, pbw = 0;
  for (const auto& s : samples) {
    pbw = std::max(pbw, s.pbw_degree());
    for (const auto& [f, u] : s.terms) max_level = std::max(max_level, f.total_degree());
  }
  rep.parameters = {{"samples", samples.size()}, {"degree_bound", degree_bound}, {"pbw_bound", pbw}, {"max_level", max_level}};
  PeterWeylOperatorLevels pw(max_level, pbw);
  FilteredAlgebra alg = FilteredAlgebra::sl2_peter_weyl();
  std::map<std::string, LevelValue> by_name;
  for (const auto& s : samples) {
    WeylOp p = s.op(pw.action());
    bool pw_ok = true, der_ok = true;
    LevelValue a, b;
    try {
      a = pw.level(p);
    } catch (const LevelAntichainError&) {
      pw_ok = false;
    }
    try {
      b = operator_level(alg, p, degree_bound);
    } catch (const LevelAntichainError&) {
      der_ok = false;
    }
    if (!pw_ok || !der_ok) {
      rep.extra.push_back({s.name + ": level defined", true, pw_ok && der_ok, false});
      continue;
    }
    by_name[s.name] = a;
    rep.add(s.name, a, b);
  }
  auto expect = [&](const std::string& name, const LevelValue& want) {
    auto it = by_name.find(name);
    if (it == by_name.end()) return;
    rep.extra.push_back({"frozen: " + name, want.to_string(), it->second.to_string(), it->second == want});
  };
  expect("1", LevelValue::of(0));
  expect("mu(H(x)1)", LevelValue::of(0));
  expect("a mu(E(x)1)", LevelValue::of(1));
  return rep;
}

inline FiltrationComparisonReport pw_vs_derivations_check() {
  return pw_vs_derivations_check(default_operator_samples());
}

class HomogeneityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pole order along det = 0 of f / det^k on PSL2.
inline long pole_order(const Poly& f, unsigned k) {
  if (f.is_zero()) throw std::invalid_argument("pole_order: zero numerator");
  if (!f.is_homogeneous()) throw HomogeneityError("pole_order: numerator is not homogeneous");
  if (f.total_degree() != static_cast<int>(2 * k)) throw HomogeneityError("pole_order: numerator degree is not 2k");
  return static_cast<long>(k) - static_cast<long>(*vanishing_order(f, QuotientRing::det_minus(0)));
}

/// Level of f / det^k as a function on SL2, in units of the root alpha = 2.
inline long matrix_coefficient_level(const Poly& f) {
  if (!f.is_homogeneous() || f.total_degree() % 2 != 0) throw HomogeneityError("matrix_coefficient_level: odd or inhomogeneous class");
  LevelValue l = pw_level(f, QuotientRing::sl2());
  if (l.is_bottom()) throw std::invalid_argument("matrix_coefficient_level: zero class");
  return l.scalar() / 2;
}

/// f / det^k with f = det^j m, m a monomial, deg f = 2k <= bound: pole order
/// against matrix-coefficient level.
inline FiltrationComparisonReport vfiltration_check(int bound) {
  if (bound < 0) throw std::invalid_argument("vfiltration_check: bound must be >= 0");
  FiltrationComparisonReport rep;
  rep.check = "vfilt";
  rep.parameters = {{"bound", bound}};
  Poly det = QuotientRing::det_minus(0);
  auto P = [](const char* t) { return parse_poly(t, QuotientRing::abcd()); };
  struct Named {
    std::string name;
    Poly f;
    unsigned k;
  };
  std::vector<Named> fixed{{"ab/det", P("a b"), 1}, {"det/det", det, 1}, {"a^2b^2/det^2", P("a^2 b^2"), 2}};
  for (const auto& e : fixed) {
    if (static_cast<int>(2 * e.k) > bound) continue;
    rep.add(e.name, LevelValue::of(pole_order(e.f, e.k)), LevelValue::of(matrix_coefficient_level(e.f)));
  }
  std::size_t classes = 0, agree = 0;
  for (int k = 0; 2 * k <= bound; ++k) {
    std::size_t here = 0, ok = 0;
    for (int j = 0; j <= k; ++j)
      for (const auto& m : monomials_of_degree(4, 2 * (k - j))) {
        Poly f = det.pow(static_cast<unsigned>(j)) * Poly::term(m, Rational(1));
        long pole = pole_order(f, static_cast<unsigned>(k));
        long lvl = matrix_coefficient_level(f);
        ++here;
        if (pole == lvl) {
          ++ok;
        } else {
          rep.add("det^" + std::to_string(j) + " " + to_text(Poly::term(m, Rational(1)), QuotientRing::abcd()) + " / det^" +
                      std::to_string(k),
                  LevelValue::of(pole), LevelValue::of(lvl));
        }
      }
    rep.extra.push_back({"degree " + std::to_string(2 * k) + ": pole order = level on all classes", here, ok, here == ok});
    classes += here;
    agree += ok;
  }
  rep.parameters["classes"] = classes;
  rep.parameters["agree"] = agree;
  return rep;
}

}  // namespace vinberg::checks
