#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace vinberg {

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_same_arity(std::size_t lhs, std::size_t rhs, const char* where) {
  if (lhs != rhs) {
    throw ArityError(std::string(where) + ": arity mismatch (" + std::to_string(lhs) + " vs " +
                     std::to_string(rhs) + ")");
  }
}

/// Exponent vector of fixed arity. Exponents are signed so that the same
/// type carries Laurent monomials in chart computations; every ring-level
/// operation works with non-negative exponents only.
class Monomial {
 public:
  static constexpr std::size_t kMaxArity = 16;
  using Exponent = std::int16_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : arity_(check_arity(arity)) {}
  Monomial(std::initializer_list<int> exps) : arity_(check_arity(exps.size())) {
    std::size_t i = 0;
    for (int e : exps) set(i++, e);
  }
  explicit Monomial(const std::vector<int>& exps) : arity_(check_arity(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial unit(std::size_t arity, std::size_t var, int power = 1) {
    Monomial m(arity);
    m.set(var, power);
    return m;
  }

  std::size_t arity() const { return arity_; }
  int operator[](std::size_t i) const { return exps_[i]; }

  void set(std::size_t i, int e) {
    if (i >= arity_) throw std::out_of_range("monomial index out of range");
    if (e > std::numeric_limits<Exponent>::max() || e < std::numeric_limits<Exponent>::min()) {
      throw std::overflow_error("monomial exponent overflow");
    }
    exps_[i] = static_cast<Exponent>(e);
  }

  int degree() const {
    int d = 0;
    for (std::size_t i = 0; i < arity_; ++i) d += exps_[i];
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.begin() + arity_, [](Exponent e) { return e == 0; });
  }

  bool is_nonnegative() const {
    return std::all_of(exps_.begin(), exps_.begin() + arity_, [](Exponent e) { return e >= 0; });
  }

  /// True iff `*this` divides `other` among ordinary monomials.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  Monomial operator*(const Monomial& rhs) const {
    require_same_arity(arity_, rhs.arity_, "Monomial::operator*");
    Monomial out(arity_);
    for (std::size_t i = 0; i < arity_; ++i) out.set(i, exps_[i] + rhs.exps_[i]);
    return out;
  }

  Monomial operator/(const Monomial& rhs) const {
    require_same_arity(arity_, rhs.arity_, "Monomial::operator/");
    Monomial out(arity_);
    for (std::size_t i = 0; i < arity_; ++i) out.set(i, exps_[i] - rhs.exps_[i]);
    return out;
  }

  std::vector<int> to_vector() const { return {exps_.begin(), exps_.begin() + arity_}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

 private:
  static std::size_t check_arity(std::size_t n) {
    if (n > kMaxArity) throw ArityError("monomial arity exceeds " + std::to_string(kMaxArity));
    return n;
  }

  std::uint8_t arity_ = 0;
  std::array<Exponent, kMaxArity> exps_{};
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable largest. With variables (a,b,c,d) the leading monomial
/// of ad-bc-k is a*d.
struct DegLexLess {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const {
    int dl = lhs.degree();
    int dr = rhs.degree();
    if (dl != dr) return dl < dr;
    for (std::size_t i = 0; i < lhs.arity(); ++i) {
      if (lhs[i] != rhs[i]) return lhs[i] < rhs[i];
    }
    return lhs.arity() < rhs.arity();
  }
};

/// All monomials of exactly the given total degree, in deglex-descending order.
inline std::vector<Monomial> monomials_of_degree(std::size_t arity, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(arity);
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == arity) {
      m.set(var, remaining);
      out.push_back(m);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m.set(var, e);
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

inline std::vector<Monomial> monomials_up_to_degree(std::size_t arity, int degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d) {
    auto part = monomials_of_degree(arity, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace vinberg
