#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "vinberg/action/coinvariants.hpp"
#include "vinberg/report.hpp"

namespace vinberg {

/// Iwasawa data inside sl2: n = span(E), a = span(H), and the chamber
/// a_t = diag(e^t, e^-t) with t -> -infinity.
struct RealFormData {
  QVector n;
  QVector a;
  int chamber_sign = -1;

  static RealFormData sl2_standard() {
    auto g = LieAlgebraDesc::sl2();
    RealFormData rf{g.basis_vector(LieAlgebraDesc::kE), g.basis_vector(LieAlgebraDesc::kH), -1};
    rf.validate(g);
    return rf;
  }

  void validate(const LieAlgebraDesc& g) const {
    LieSubalgebra nn(g, {n});
    if (!nn.contains(g.bracket(a, n))) throw std::invalid_argument("RealFormData: [a, n] is not inside n");
  }
};

struct Exponent {
  Rational lambda;
  unsigned log_power = 0;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Multiset of (generalized eigenvalue, Jordan block size - 1), sorted.
using ExponentSet = std::vector<Exponent>;

class SplittingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

inline Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

/// Distinct rational roots with multiplicities, by the rational root test.
inline std::vector<std::pair<Rational, unsigned>> rational_roots(std::vector<Rational> c) {
  std::vector<std::pair<Rational, unsigned>> out;
  unsigned zero = 0;
  while (c.size() > 1 && c.front() == 0) {
    c.erase(c.begin());
    ++zero;
  }
  if (zero) out.emplace_back(Rational(0), zero);
  if (c.size() <= 1) return out;
  mpz_class l = 1;
  for (const auto& x : c) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> ints;
  for (const auto& x : c) ints.push_back(mpz_class(x * l));
  std::set<Rational> cand;
  for (const auto& p : divisors(ints.front()))
    for (const auto& q : divisors(ints.back())) {
      Rational r(p, q);
      r.canonicalize();
      cand.insert(r);
      cand.insert(-r);
    }
  for (const auto& r : cand) {
    unsigned mult = 0;
    // Deflate by (x - r) while it divides.
    while (c.size() > 1 && eval_poly(c, r) == 0) {
      std::vector<Rational> q(c.size() - 1);
      Rational carry = 0;
      for (std::size_t i = c.size() - 1; i-- > 0;) {
        carry = c[i + 1] + carry * r;
        q[i] = carry;
      }
      c = std::move(q);
      ++mult;
    }
    if (mult) out.emplace_back(r, mult);
  }
  if (c.size() > 1) throw SplittingError("characteristic polynomial does not split over Q");
  return out;
}

}  // namespace detail

/// Jordan data of a square rational matrix: one entry per Jordan block.
inline ExponentSet jordan_exponents(const QMatrix& a) {
  std::size_t n = a.rows();
  ExponentSet out;
  if (n == 0) return out;
  for (const auto& [lam, mult] : detail::rational_roots(char_poly(a))) {
    QMatrix nmat = a - QMatrix::identity(n) * lam;
    // r[j] = rank of N^j, j = 0..mult+1.
    std::vector<std::size_t> r{n};
    QMatrix pw = QMatrix::identity(n);
    for (unsigned j = 1; j <= mult + 1; ++j) {
      pw = pw * nmat;
      r.push_back(rank(pw));
    }
    for (unsigned j = 1; j <= mult; ++j) {
      std::size_t at_least_j = r[j - 1] - r[j];
      std::size_t at_least_next = r[j] - r[j + 1];
      for (std::size_t b = 0; b < at_least_j - at_least_next; ++b) out.push_back({lam, j - 1});
    }
  }
  std::sort(out.begin(), out.end(), [](const Exponent& x, const Exponent& y) {
    return x.lambda != y.lambda ? x.lambda < y.lambda : x.log_power < y.log_power;
  });
  return out;
}

struct CoinvariantExponents {
  std::size_t dim = 0;
  QMatrix cartan;
  ExponentSet exponents;
};

/// V / n.V with the induced a-action and its Jordan data.
inline CoinvariantExponents coinvariant_exponents(const FinDimRep& v, const RealFormData& rf) {
  rf.validate(v.lie());
  LieSubalgebra n(v.lie(), {rf.n});
  LieSubalgebra a(v.lie(), {rf.a});
  auto c = coinvariants(v, n, a);
  CoinvariantExponents out;
  out.dim = c.dim;
  out.cartan = c.induced.at(0);
  out.exponents = jordan_exponents(out.cartan);
  return out;
}

inline ExponentSet exponents_from_coinvariants(const FinDimRep& v, const RealFormData& rf) {
  return coinvariant_exponents(v, rf).exponents;
}

/// Laurent exponents of s across all matrix entries of Sym^m(diag(s, 1/s)),
/// by substituting x -> s x, y -> y / s into the basis x^(m-i) y^i.
inline std::set<long> matrix_coefficient_exponents(unsigned m) {
  Poly sx = Poly::term(Monomial{1, 0, 1}, Rational(1));
  Poly ys = Poly::term(Monomial{0, 1, -1}, Rational(1));
  std::set<long> out;
  for (unsigned i = 0; i <= m; ++i) {
    Poly image = sx.pow(m - i) * ys.pow(i);
    for (const auto& [mon, c] : image.terms())
      if (c != 0) out.insert(mon[2]);
  }
  return out;
}

struct LeadingExponentResult {
  unsigned m = 0;
  CoinvariantExponents coinv;
  std::set<long> oracle;
  long leading = 0;
  ExponentSet bimodule_exponents;
  CheckReport report;

  json to_json() const {
    json ce = json::array();
    for (const auto& e : coinv.exponents) ce.push_back({to_string(e.lambda), e.log_power});
    json oe = json::array();
    for (long x : oracle) oe.push_back(x);
    return {{"m", m}, {"coinvariant_exponents", ce}, {"oracle_exponents", oe}, {"leading", leading}, {"pass", report.pass()}};
  }
};

inline std::string exponent_set_text(const ExponentSet& s) {
  std::string t = "{";
  for (std::size_t i = 0; i < s.size(); ++i) t += (i ? ", (" : "(") + to_string(s[i].lambda) + "," + std::to_string(s[i].log_power) + ")";
  return t + "}";
}

inline std::string integer_set_text(const std::set<long>& s) {
  std::string t = "{";
  bool first = true;
  for (long x : s) {
    t += (first ? "" : ", ") + std::to_string(x);
    first = false;
  }
  return t + "}";
}

/// The oracle's chamber-leading exponent (the minimum) must be a coinvariant
/// exponent, and every coinvariant exponent must occur in the oracle.
inline LeadingExponentResult leading_exponent_result(unsigned m) {
  LeadingExponentResult r;
  r.m = m;
  auto rf = RealFormData::sl2_standard();
  r.coinv = coinvariant_exponents(sym_power_rep(m), rf);
  r.oracle = matrix_coefficient_exponents(m);
  r.leading = *r.oracle.begin();
  auto& rep = r.report;
  rep.check = "exponents";
  rep.parameters = {{"m", m}};

  bool has_leading = false, subset = true, semisimple = true;
  for (const auto& e : r.coinv.exponents) {
    has_leading = has_leading || e.lambda == r.leading;
    bool integral = e.lambda.get_den() == 1;
    subset = subset && integral && r.oracle.count(e.lambda.get_num().get_si());
    semisimple = semisimple && e.log_power == 0;
  }
  rep.add("leading oracle exponent is a coinvariant exponent", r.leading, exponent_set_text(r.coinv.exponents), has_leading);
  rep.add("coinvariant exponents occur in the oracle", integer_set_text(r.oracle), exponent_set_text(r.coinv.exponents), subset);
  rep.add_eq("coinvariant dimension", 1, r.coinv.dim);
  rep.add("log powers", 0, semisimple ? 0 : 1, semisimple);

  // Auxiliary: V (x) V^* by E(x)1 and 1(x)F, with the H(x)1 action.
  auto bm = external_tensor(sym_power_rep(m), dual_rep(sym_power_rep(m)));
  const auto& g = bm.lie();
  using S = Sl2Pair;
  auto c = coinvariants(bm, LieSubalgebra(g, {g.basis_vector(S::E1), g.basis_vector(S::F2)}),
                        LieSubalgebra(g, {g.basis_vector(S::H1)}));
  r.bimodule_exponents = jordan_exponents(c.induced.at(0));
  bool aux = !r.bimodule_exponents.empty();
  for (const auto& e : r.bimodule_exponents)
    aux = aux && e.lambda.get_den() == 1 && r.oracle.count(e.lambda.get_num().get_si());
  rep.add("auxiliary: bimodule coinvariant exponents occur in the oracle", integer_set_text(r.oracle),
          exponent_set_text(r.bimodule_exponents), aux);
  return r;
}

inline CheckReport leading_exponent_check(unsigned m) { return leading_exponent_result(m).report; }

}  // namespace vinberg
