#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vinberg/action/action.hpp"
#include "vinberg/report.hpp"
#include "vinberg/weyl/vector_field.hpp"

namespace vinberg::checks {

struct IdentityEntry {
  std::string name;
  WeylOp lhs;
  WeylOp rhs;
  WeylOp difference;
  bool pass = false;
};

/// Identities checked as exact equalities in the Weyl algebra, plus any
/// structural side checks (spans, ranks).
struct IdentityReport {
  std::string check;
  std::vector<IdentityEntry> entries;
  std::vector<CheckItem> extra;

  void add(std::string name, WeylOp lhs, WeylOp rhs) {
    WeylOp diff = lhs - rhs;
    bool ok = diff.is_zero();
    entries.push_back({std::move(name), std::move(lhs), std::move(rhs), std::move(diff), ok});
  }

  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    for (const auto& e : extra)
      if (!e.pass) return false;
    return true;
  }

  CheckReport to_report() const {
    CheckReport rep;
    rep.check = check;
    for (const auto& e : entries) rep.add(e.name, "0", to_text(e.difference, QuotientRing::abcd()), e.pass);
    for (const auto& e : extra) rep.items.push_back(e);
    return rep;
  }
};

namespace detail {

inline WeylOp W(const char* text) { return parse_weyl(text, QuotientRing::abcd()); }
inline Poly P(const char* text) { return parse_poly(text, QuotientRing::abcd()); }

struct MomentTable {
  InfinitesimalAction act = builtin_lr_action_mat2();
  std::shared_ptr<const UEnv> u = uenv_sl2_pair();
  WeylOp mu(std::size_t i) const { return act.field(i); }
};

}  // namespace detail

/// Span of the relative linear fields, bracket compatibility of the moment
/// table, and the Casimir/Euler identities.
inline IdentityReport verify_sl2_identities() {
  using detail::P;
  using detail::W;
  using S = Sl2Pair;
  detail::MomentTable t;
  IdentityReport rep;
  rep.check = "identities";
  Poly det = P("a d - b c");

  rep.add("(ad-bc) mu(1(x)E) = -a^2 mu(E(x)1) + c^2 mu(F(x)1) + ac mu(H(x)1)", det * t.mu(S::E2),
          P("-a^2") * t.mu(S::E1) + P("c^2") * t.mu(S::F1) + P("a c") * t.mu(S::H1));
  rep.add("(ad-bc) mu(1(x)F) = b^2 mu(E(x)1) - d^2 mu(F(x)1) - bd mu(H(x)1)", det * t.mu(S::F2),
          P("b^2") * t.mu(S::E1) + P("-d^2") * t.mu(S::F1) + P("-b d") * t.mu(S::H1));
  rep.add("(ad-bc) mu(1(x)H) = 2ab mu(E(x)1) - 2cd mu(F(x)1) - (ad+bc) mu(H(x)1)", det * t.mu(S::H2),
          P("2 a b") * t.mu(S::E1) + P("-2 c d") * t.mu(S::F1) + P("-a d - b c") * t.mu(S::H1));

  WeylOp eu = euler_operator(4);
  WeylOp stated = weyl_mul(eu, eu) - det * W("Da Dd - Db Dc");
  WeylOp c1 = moment_map(casimir_sl2(t.u, 0), t.act);
  WeylOp c2 = moment_map(casimir_sl2(t.u, 3), t.act);
  rep.add("mu(Delta(x)1) = Eu^2 - (ad-bc)(Da Dd - Db Dc)", c1, stated);
  rep.add("mu(1(x)Delta) = Eu^2 - (ad-bc)(Da Dd - Db Dc)", c2, stated);
  rep.add("mu(Delta(x)1) = mu(1(x)Delta)", c1, c2);
  rep.add("mu(1) = 1", moment_map(t.u->one(), t.act), W("1"));

  // Diagnostic: the coefficient that the det^s test singles out.
  WeylOp four = weyl_mul(eu, eu) - P("4 a d - 4 b c") * W("Da Dd - Db Dc");
  bool four_ok = c1 == four;
  rep.extra.push_back({"diagnostic: mu(Delta(x)1) = Eu^2 - 4(ad-bc)(Da Dd - Db Dc)", true, four_ok, four_ok});

  const auto& g = t.act.lie();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      rep.add("[mu(" + g.names()[i] + "), mu(" + g.names()[j] + ")] = mu([" + g.names()[i] + "," + g.names()[j] + "])",
              weyl_commutator(t.mu(i), t.mu(j)), t.act.field_of(g.bracket_of_basis(i, j)));
    }

  // The six listed fields span the relative fields with linear coefficients.
  std::vector<WeylOp> listed{W("c Da + d Db"), W("b Da + d Dc"), W("a Da - d Dd"),
                             W("b Db - c Dc"), W("a Db + c Dd"), W("a Dc + b Dd")};
  auto kernel = relative_fields_of_degree(det, 1);
  bool all_relative = true;
  for (const auto& f : listed) all_relative = all_relative && is_relative(f, det);
  std::size_t listed_rank = operator_span_rank(listed);
  std::vector<WeylOp> joint = kernel;
  joint.insert(joint.end(), listed.begin(), listed.end());
  std::size_t joint_rank = operator_span_rank(joint);
  rep.extra.push_back({"linear fields: listed fields are relative", true, all_relative, all_relative});
  rep.extra.push_back({"linear fields: dim of relative fields with linear coefficients", 6, kernel.size(), kernel.size() == 6});
  rep.extra.push_back({"linear fields: rank of listed fields", 6, listed_rank, listed_rank == 6});
  rep.extra.push_back({"linear fields: listed fields span the kernel", kernel.size(), joint_rank, joint_rank == kernel.size() && listed_rank == kernel.size()});
  std::vector<WeylOp> table = t.act.fields();
  table.insert(table.end(), listed.begin(), listed.end());
  std::size_t table_rank = operator_span_rank(table);
  rep.extra.push_back({"moment table: table fields span the same space", 6, table_rank, table_rank == 6 && operator_span_rank(t.act.fields()) == 6});
  return rep;
}

/// Exact left division in the Weyl algebra: Q with P = f * Q, if it exists.
inline std::optional<WeylOp> left_divide(const WeylOp& p, const Poly& f) {
  WeylOp q(p.arity());
  for (const auto& d : p.derivative_support()) {
    auto c = exact_quotient(p.coefficient_of(d), f);
    if (!c) return std::nullopt;
    for (const auto& [m, v] : c->terms()) q.add_term(m, d, v);
  }
  return q;
}

/// D_SL2 presentation: each relation, computed on Mat2, differs from zero by
/// a left multiple of ad-bc-1; the cofactor is recovered by exact division.
inline IdentityReport verify_dsl2_presentation() {
  using detail::P;
  using S = Sl2Pair;
  detail::MomentTable t;
  IdentityReport rep;
  rep.check = "presentation";
  Poly rel = QuotientRing::det_minus(1);

  struct Relation {
    std::string name;
    WeylOp lhs, rhs, cofactor;
  };
  std::vector<Relation> rels{
      {"1(x)1(x)E = -a^2(x)E(x)1 + c^2(x)F(x)1 + ac(x)H(x)1", t.mu(S::E2),
       P("-a^2") * t.mu(S::E1) + P("c^2") * t.mu(S::F1) + P("a c") * t.mu(S::H1), t.mu(S::E2) * Rational(-1)},
      {"1(x)1(x)F = b^2(x)E(x)1 - d^2(x)F(x)1 + bd(x)H(x)1", t.mu(S::F2),
       P("b^2") * t.mu(S::E1) + P("-d^2") * t.mu(S::F1) + P("b d") * t.mu(S::H1), t.mu(S::F2) * Rational(-1)},
      {"1(x)1(x)H = 2ab(x)E(x)1 - 2cd(x)F(x)1 - (ad+bc)(x)H(x)1", t.mu(S::H2),
       P("2 a b") * t.mu(S::E1) + P("-2 c d") * t.mu(S::F1) + P("-a d - b c") * t.mu(S::H1), t.mu(S::H2) * Rational(-1)},
      {"1(x)1(x)1 = 1(x)1(x)1", WeylOp::constant(4, Rational(1)), WeylOp::constant(4, Rational(1)), WeylOp(4)},
  };
  for (const auto& r : rels) {
    WeylOp diff = r.lhs - r.rhs;
    auto q = left_divide(diff, rel);
    bool ok = q && *q == r.cofactor;
    rep.extra.push_back({r.name + ": cofactor of (ad-bc-1)", to_text(r.cofactor, QuotientRing::abcd()),
                         q ? json(to_text(*q, QuotientRing::abcd())) : json("not in the left ideal"), ok});
  }
  // Diagnostic: the 1(x)F relation with the sign that the identity above implies.
  WeylOp alt = t.mu(S::F2) - (P("b^2") * t.mu(S::E1) + P("-d^2") * t.mu(S::F1) + P("-b d") * t.mu(S::H1));
  auto q = left_divide(alt, rel);
  bool ok = q && *q == t.mu(S::F2) * Rational(-1);
  rep.extra.push_back({"diagnostic: 1(x)1(x)F with -bd(x)H(x)1: cofactor of (ad-bc-1)", to_text(t.mu(S::F2) * Rational(-1), QuotientRing::abcd()),
                       q ? json(to_text(*q, QuotientRing::abcd())) : json("not in the left ideal"), ok});
  return rep;
}

}  // namespace vinberg::checks
