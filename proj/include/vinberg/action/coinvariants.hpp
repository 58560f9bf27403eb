#pragma once

#include <optional>
#include <vector>

#include "vinberg/action/action.hpp"
#include "vinberg/lie/rep.hpp"

namespace vinberg {

/// M / s.M with the projection M -> M/s.M (rows form a basis of the
/// annihilator of s.M) and, optionally, the action induced on the quotient by
/// a subalgebra normalizing s.
struct CoinvariantsResult {
  std::size_t dim = 0;
  QMatrix projection;
  std::vector<QMatrix> induced;

  json to_json() const {
    json ind = json::array();
    for (const auto& m : induced) ind.push_back(vinberg::to_json(m));
    return {{"dim", dim}, {"projection", vinberg::to_json(projection)}, {"induced", ind}};
  }
};

class NormalizerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix whose columns span s.M.
inline QMatrix action_span(const FinDimRep& m, const std::vector<QVector>& s) {
  QMatrix span(m.dim(), s.size() * m.dim());
  for (std::size_t k = 0; k < s.size(); ++k) {
    QMatrix a = m.act(s[k]);
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) span(r, k * m.dim() + c) = a(r, c);
  }
  return span;
}

/// Action induced on a quotient with projection p: the unique A with
/// p X = A p. Throws if X does not descend.
inline QMatrix induced_on_quotient(const QMatrix& p, const QMatrix& x) {
  if (p.rows() == 0) return QMatrix(0, 0);
  QMatrix a = p * x * right_inverse(p);
  if (!(p * x == a * p)) throw NormalizerError("action does not descend to the quotient");
  return a;
}

inline CoinvariantsResult coinvariants(const FinDimRep& m, const LieSubalgebra& s,
                                       const std::optional<LieSubalgebra>& commuting = std::nullopt) {
  if (!(s.ambient() == m.lie())) throw std::invalid_argument("coinvariants: subalgebra of a different Lie algebra");
  if (commuting && !s.normalized_by(*commuting)) {
    throw NormalizerError("coinvariants: commuting subalgebra does not normalize s");
  }
  CoinvariantsResult out;
  auto ann = left_nullspace(action_span(m, s.basis()));
  out.dim = ann.size();
  out.projection = ann.empty() ? QMatrix(0, m.dim()) : QMatrix::from_rows(ann, m.dim());
  if (commuting) {
    for (const auto& x : commuting->basis()) out.induced.push_back(induced_on_quotient(out.projection, m.act(x)));
  }
  return out;
}

inline CoinvariantsResult coinvariants(const FinDimBimodule& m, const LieSubalgebra& s,
                                       const std::optional<LieSubalgebra>& commuting = std::nullopt) {
  return coinvariants(m.rep(), s, commuting);
}

/// True iff the projection kills s.M exactly.
inline bool projection_annihilates(const CoinvariantsResult& r, const FinDimRep& m, const LieSubalgebra& s) {
  for (const auto& x : s.basis())
    if (!(r.projection * m.act(x)).is_zero()) return false;
  return true;
}

/// Kernel of the evaluation map g -> T_p at a point of the action's variety.
inline LieSubalgebra stabilizer_subalgebra(const InfinitesimalAction& act, const RationalPoint& p) {
  if (!on_variety(act.ring(), p)) throw PointError("point " + p.to_string() + " is not on the variety");
  return LieSubalgebra(act.lie(), nullspace(act.evaluation_matrix(p.vec())));
}

/// Elements x with [x, s] in s.
inline std::vector<QVector> normalizer(const LieSubalgebra& s) {
  const auto& g = s.ambient();
  std::size_t n = g.dim();
  // Rows of q cut out s.
  auto q = s.dim() == 0 ? std::vector<QVector>{} : left_nullspace(QMatrix::from_cols(s.basis(), n));
  if (s.dim() == 0) return nullspace(QMatrix(0, n));
  QMatrix cond(q.size() * s.dim(), n);
  for (std::size_t j = 0; j < s.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      QVector br = g.bracket(g.basis_vector(i), s.basis()[j]);
      for (std::size_t r = 0; r < q.size(); ++r) {
        Rational v = 0;
        for (std::size_t k = 0; k < n; ++k) v += q[r][k] * br[k];
        cond(j * q.size() + r, i) = v;
      }
    }
  return nullspace(cond);
}

/// An element of the normalizer of the stabilizer whose field equals the
/// Euler field at p. Exists at horocycle points; defined up to the stabilizer.
inline std::optional<QVector> euler_lift(const InfinitesimalAction& act, const LieSubalgebra& stab, const RationalPoint& p) {
  auto nbasis = normalizer(stab);
  if (nbasis.empty()) return std::nullopt;
  QMatrix nmat = QMatrix::from_cols(nbasis, act.lie().dim());
  QMatrix ev = act.evaluation_matrix(p.vec()) * nmat;
  auto y = solve(ev, p.vec());
  if (!y) return std::nullopt;
  return nmat.apply(*y);
}

struct LocalizationFiber {
  PointKind kind = PointKind::Neither;
  LieSubalgebra stabilizer;
  CoinvariantsResult coinvariants;
  std::optional<QVector> cartan;  // Euler lift, at horocycle points

  json to_json() const {
    json basis = json::array();
    for (const auto& v : stabilizer.basis()) basis.push_back(vinberg::to_json(v));
    json j = {{"stabilizer", basis}, {"coinvariants", coinvariants.to_json()}};
    j["kind"] = kind == PointKind::SL2 ? "SL2" : kind == PointKind::Horocycle ? "horocycle" : "other";
    if (cartan) j["cartan"] = vinberg::to_json(*cartan);
    return j;
  }
};

/// Fiber at p of the localization of M along the action: stabilizer
/// coinvariants, with the Euler lift's induced action at horocycle points.
inline LocalizationFiber localization_fiber(const FinDimBimodule& m, const InfinitesimalAction& act, const RationalPoint& p) {
  if (!(m.lie() == act.lie())) throw std::invalid_argument("localization_fiber: module over a different Lie algebra");
  LieSubalgebra stab = stabilizer_subalgebra(act, p);
  PointKind kind = classify_point(p);
  std::optional<QVector> lift;
  std::optional<LieSubalgebra> commuting;
  if (kind == PointKind::Horocycle) {
    lift = euler_lift(act, stab, p);
    if (lift) commuting = LieSubalgebra(act.lie(), {*lift});
  }
  return {kind, stab, coinvariants(m, stab, commuting), lift};
}

/// Localization using the action appropriate for the point: O(SL2) for
/// det = 1, the rank-one chart for det = 0.
inline LocalizationFiber localization_fiber(const FinDimBimodule& m, const RationalPoint& p) {
  switch (classify_point(p)) {
    case PointKind::SL2:
      return localization_fiber(m, builtin_lr_action_sl2(), p);
    case PointKind::Horocycle:
      return localization_fiber(m, builtin_lr_action_horocycle(), p);
    default:
      throw PointError("point " + p.to_string() + " lies neither on SL2 nor on the rank-one locus");
  }
}

}  // namespace vinberg
