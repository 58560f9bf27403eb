#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vinberg/exactalg/serialize.hpp"
#include "vinberg/lie/uenv.hpp"
#include "vinberg/weyl/serialize.hpp"
#include "vinberg/weyl/weyl_op.hpp"

namespace vinberg {

/// A Lie algebra map g -> vector fields on Spec of a quotient ring.
class InfinitesimalAction {
 public:
  InfinitesimalAction(LieAlgebraDesc g, QuotientRing ring, std::vector<WeylOp> fields)
      : g_(std::move(g)), ring_(std::move(ring)), fields_(std::move(fields)) {
    validate();
  }

  const LieAlgebraDesc& lie() const { return g_; }
  const QuotientRing& ring() const { return ring_; }
  const std::vector<WeylOp>& fields() const { return fields_; }
  const WeylOp& field(std::size_t i) const { return fields_.at(i); }

  WeylOp field_of(const QVector& x) const {
    WeylOp op(ring_.arity());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) op += fields_[i] * x[i];
    return op;
  }

  /// Matrix with entry (i, j) = coefficient of d_i in field j at the point.
  QMatrix evaluation_matrix(const QVector& point) const {
    QMatrix m(ring_.arity(), g_.dim());
    for (std::size_t j = 0; j < g_.dim(); ++j) {
      auto coeffs = field_coefficients(fields_[j]);
      for (std::size_t i = 0; i < ring_.arity(); ++i) m(i, j) = coeffs[i].evaluate(point);
    }
    return m;
  }

  /// Bracket compatibility [field_i, field_j] = field_{[x_i, x_j]} for i < j.
  bool brackets_compatible() const {
    for (std::size_t i = 0; i < g_.dim(); ++i)
      for (std::size_t j = i + 1; j < g_.dim(); ++j)
        if (!(weyl_commutator(fields_[i], fields_[j]) == field_of(g_.bracket_of_basis(i, j)))) return false;
    return true;
  }

 private:
  void validate() const {
    if (fields_.size() != g_.dim()) throw std::invalid_argument("InfinitesimalAction: one field per basis element");
    for (const auto& f : fields_) {
      require_same_arity(ring_.arity(), f.arity(), "InfinitesimalAction");
      if (!f.is_vector_field() && !f.is_zero()) throw std::invalid_argument("InfinitesimalAction: not a vector field");
      if (!preserves_ideal(f, ring_)) throw std::invalid_argument("InfinitesimalAction: field does not preserve the ideal");
    }
    if (!brackets_compatible()) throw std::invalid_argument("InfinitesimalAction: not a Lie algebra map");
  }

  LieAlgebraDesc g_;
  QuotientRing ring_;
  std::vector<WeylOp> fields_;
};

/// The left-right moment map table for sl2 (+) sl2 acting on 2x2 matrices,
/// in the basis F1 H1 E1 F2 H2 E2.
inline std::vector<WeylOp> lr_moment_fields() {
  const auto& names = QuotientRing::abcd();
  auto w = [&](const char* text) { return parse_weyl(text, names); };
  return {
      w("-a Dc - b Dd"),                  // F (x) 1
      w("-a Da - b Db + c Dc + d Dd"),    // H (x) 1
      w("-c Da - d Db"),                  // E (x) 1
      w("b Da + d Dc"),                   // 1 (x) F
      w("a Da - b Db + c Dc - d Dd"),     // 1 (x) H
      w("a Db + c Dd"),                   // 1 (x) E
  };
}

inline LieAlgebraDesc sl2_pair() { return LieAlgebraDesc::direct_sum(LieAlgebraDesc::sl2(), LieAlgebraDesc::sl2()); }

/// Indices of the sl2 (+) sl2 basis.
struct Sl2Pair {
  static constexpr std::size_t F1 = 0, H1 = 1, E1 = 2, F2 = 3, H2 = 4, E2 = 5;
};

inline InfinitesimalAction builtin_lr_action(const QuotientRing& ring) {
  return InfinitesimalAction(sl2_pair(), ring, lr_moment_fields());
}
inline InfinitesimalAction builtin_lr_action_sl2() { return builtin_lr_action(QuotientRing::sl2()); }
inline InfinitesimalAction builtin_lr_action_mat2() { return builtin_lr_action(QuotientRing::mat2()); }
inline InfinitesimalAction builtin_lr_action_horocycle() { return builtin_lr_action(QuotientRing::horocycle()); }

/// Multiplicative extension U(g) -> differential operators.
inline WeylOp moment_map(const UEnvElement& u, const InfinitesimalAction& act) {
  const auto& g = u.algebra()->lie();
  if (!(g == act.lie())) throw std::invalid_argument("moment_map: element of a different enveloping algebra");
  const std::size_t n = act.ring().arity();
  WeylOp out(n);
  for (const auto& [m, c] : u.terms()) {
    WeylOp t = WeylOp::constant(n, Rational(1));
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (int e = 0; e < m[i]; ++e) t = weyl_mul(t, act.field(i));
    out += t * c;
  }
  return out;
}

/// A point (a, b, c, d) of 2x2 matrix space.
struct RationalPoint {
  std::array<Rational, 4> coords{};

  QVector vec() const { return {coords.begin(), coords.end()}; }
  Rational det() const { return coords[0] * coords[3] - coords[1] * coords[2]; }
  bool is_zero() const {
    for (const auto& x : coords)
      if (x != 0) return false;
    return true;
  }

  static RationalPoint parse(std::string_view text) {
    RationalPoint p;
    std::size_t idx = 0, start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ',') {
        if (idx == 4) throw ParseError("point must have exactly four coordinates");
        p.coords[idx++] = parse_rational(text.substr(start, i - start));
        start = i + 1;
      }
    }
    if (idx != 4) throw ParseError("point must have exactly four coordinates");
    return p;
  }

  json to_json() const {
    json arr = json::array();
    for (const auto& x : coords) arr.push_back(vinberg::to_string(x));
    return arr;
  }
  static RationalPoint from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("point JSON must be a 4-vector");
    RationalPoint p;
    for (std::size_t i = 0; i < 4; ++i) p.coords[i] = rational_from_json(j[i]);
    return p;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + vinberg::to_string(coords[i]);
    return s + ")";
  }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

class PointError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PointKind { SL2, Horocycle, Neither };

inline PointKind classify_point(const RationalPoint& p) {
  Rational d = p.det();
  if (d == 1) return PointKind::SL2;
  if (d == 0 && !p.is_zero()) return PointKind::Horocycle;
  return PointKind::Neither;
}

inline bool on_variety(const QuotientRing& ring, const RationalPoint& p) {
  if (!ring.has_relation()) return true;
  if (ring.relation().evaluate(p.vec()) != 0) return false;
  // The horocycle space excludes the zero matrix.
  return ring.kind() != QuotientRing::Kind::Horocycle || !p.is_zero();
}

}  // namespace vinberg
