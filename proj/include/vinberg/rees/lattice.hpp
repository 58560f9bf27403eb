#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "vinberg/exactalg/level.hpp"
#include "vinberg/exactalg/linalg.hpp"

namespace vinberg {

/// Z^r ordered by the monoid generated by linearly independent alpha_i:
/// mu <= lambda iff lambda - mu is a non-negative integer combination.
class LatticeOrder {
 public:
  LatticeOrder(std::size_t rank, std::vector<std::vector<long>> generators)
      : rank_(rank), generators_(std::move(generators)) {
    if (generators_.size() != rank_) throw std::invalid_argument("LatticeOrder: need exactly rank generators");
    for (const auto& g : generators_)
      if (g.size() != rank_) throw ArityError("LatticeOrder: generator of wrong rank");
    QMatrix m(rank_, rank_);
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t i = 0; i < rank_; ++i) m(i, j) = generators_[j][i];
    if (rank_bareiss(m) != rank_) throw std::invalid_argument("LatticeOrder: generators are dependent");
    basis_ = m;
  }

  /// Z with the single generator alpha.
  static LatticeOrder rank_one(long alpha) { return LatticeOrder(1, {{alpha}}); }
  /// SL2 weights ordered by the positive root 2.
  static LatticeOrder sl2() { return rank_one(2); }

  std::size_t rank() const { return rank_; }
  const std::vector<std::vector<long>>& generators() const { return generators_; }

  /// Coordinates of v in the generator basis.
  QVector coordinates(const std::vector<long>& v) const {
    if (v.size() != rank_) throw ArityError("LatticeOrder: vector of wrong rank");
    QVector rhs(v.begin(), v.end());
    return *solve(basis_, rhs);
  }

  bool leq(const std::vector<long>& mu, const std::vector<long>& lambda) const {
    std::vector<long> diff(rank_);
    for (std::size_t i = 0; i < rank_; ++i) diff[i] = lambda.at(i) - mu.at(i);
    for (const auto& c : coordinates(diff))
      if (c < 0 || !is_integer(c)) return false;
    return true;
  }

  bool leq(const LevelValue& mu, const LevelValue& lambda) const {
    if (mu.is_bottom()) return true;
    if (lambda.is_bottom()) return false;
    return leq(mu.value, lambda.value);
  }

  /// Minimal elements among the points dominating every point of `s`. With
  /// independent generators this set has at most one element: points of
  /// different cosets of the root lattice have no common upper bound, and
  /// otherwise the coordinatewise max in generator coordinates is least.
  std::vector<std::vector<long>> minimal_upper_bounds(const std::vector<std::vector<long>>& s) const {
    if (s.empty()) throw std::invalid_argument("minimal_upper_bounds: empty set");
    QVector best = coordinates(s[0]);
    for (std::size_t k = 1; k < s.size(); ++k) {
      QVector c = coordinates(s[k]);
      for (std::size_t i = 0; i < rank_; ++i) {
        Rational diff = c[i] - best[i];
        if (!is_integer(diff)) return {};
        if (diff > 0) best[i] = c[i];
      }
    }
    QVector point = basis_.apply(best);
    std::vector<long> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) out[i] = point[i].get_num().get_si();
    return {out};
  }

  std::vector<long> add(const std::vector<long>& x, const std::vector<long>& y) const {
    std::vector<long> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) out[i] = x.at(i) + y.at(i);
    return out;
  }
  std::vector<long> sub(const std::vector<long>& x, const std::vector<long>& y) const {
    std::vector<long> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) out[i] = x.at(i) - y.at(i);
    return out;
  }

 private:
  std::size_t rank_;
  std::vector<std::vector<long>> generators_;
  QMatrix basis_;
};

inline bool dominance_leq(const LatticeOrder& order, const std::vector<long>& mu, const std::vector<long>& lambda) {
  return order.leq(mu, lambda);
}

}  // namespace vinberg
