#include <gtest/gtest.h>

#include <random>

#include "oracles/poly_oracle.hpp"
#include "vinberg/action/coinvariants.hpp"

using namespace vinberg;
using oracle::P;
using S = Sl2Pair;

namespace {

WeylOp W(const std::string& text) { return parse_weyl(text, oracle::abcd()); }

RationalPoint pt(const char* text) { return RationalPoint::parse(text); }

/// Multiplicity of the trivial representation in V_m (x) V_k, from weight
/// multiplicities: #(weight 0) - #(weight 2).
std::size_t trivial_multiplicity(int m, int k) {
  int zero = 0, two = 0;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= k; ++j) {
      int w = (m - 2 * i) + (k - 2 * j);
      zero += w == 0;
      two += w == 2;
    }
  return static_cast<std::size_t>(zero - two);
}

QVector e(std::size_t i) { return sl2_pair().basis_vector(i); }

}  // namespace

TEST(MomentMap, TableEntries) {
  auto act = builtin_lr_action_mat2();
  EXPECT_EQ(act.field(S::E1), W("-c Da - d Db"));
  EXPECT_EQ(act.field(S::H2), W("a Da - b Db + c Dc - d Dd"));
  EXPECT_EQ(weyl_commutator(act.field(S::E1), act.field(S::F1)), act.field(S::H1));
  EXPECT_EQ(weyl_commutator(act.field(S::E2), act.field(S::F2)), act.field(S::H2));
  EXPECT_TRUE(act.brackets_compatible());
}

TEST(MomentMap, ValidatesLieMap) {
  auto fields = lr_moment_fields();
  std::swap(fields[S::E1], fields[S::F1]);
  EXPECT_THROW(InfinitesimalAction(sl2_pair(), QuotientRing::mat2(), fields), std::invalid_argument);
  auto bad = lr_moment_fields();
  bad[S::H1] = W("a Da");
  EXPECT_THROW(InfinitesimalAction(sl2_pair(), QuotientRing::mat2(), bad), std::invalid_argument);
}

TEST(MomentMap, FieldsPreserveBothRelations) {
  for (const auto& f : lr_moment_fields()) {
    EXPECT_TRUE(is_relative(f, P("a d - b c")));
    EXPECT_TRUE(preserves_ideal(f, QuotientRing::sl2()));
  }
}

TEST(MomentMap, CasimirIdentity) {
  auto act = builtin_lr_action_mat2();
  auto u = uenv_sl2_pair();
  WeylOp eu = euler_operator(4);
  // Oracle: on det^s the fields vanish, so the Casimir acts by 1, while Eu^2 gives
  // (2s+1)^2 and Cayley gives (DaDd - DbDc) det^s = s(s+1) det^(s-1). Only the
  // coefficient 4 on det * (DaDd - DbDc) is consistent with all s.
  WeylOp rhs = weyl_mul(eu, eu) - P("4 a d - 4 b c") * W("Da Dd - Db Dc");
  EXPECT_EQ(moment_map(casimir_sl2(u, 0), act), rhs);
  EXPECT_EQ(moment_map(casimir_sl2(u, 3), act), rhs);
  EXPECT_EQ(moment_map(u->one(), act), W("1"));
  Poly det = P("a d - b c");
  for (int s = 0; s <= 4; ++s) {
    Poly ds = det.pow(s);
    EXPECT_EQ(apply(moment_map(casimir_sl2(u, 0), act), ds), ds);
    EXPECT_EQ(apply(weyl_mul(eu, eu), ds), ds * Rational((2 * s + 1) * (2 * s + 1)));
  }
  // With coefficient 1 the difference is nonzero.
  WeylOp unit_coef = weyl_mul(eu, eu) - det * W("Da Dd - Db Dc");
  EXPECT_NE(moment_map(casimir_sl2(u, 0), act), unit_coef);
}

TEST(MomentMap, Multiplicative) {
  auto act = builtin_lr_action_mat2();
  auto u = uenv_sl2_pair();
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<std::size_t> letter(0, 5), len(0, 3);
  auto rnd = [&] {
    std::vector<std::size_t> w(len(rng));
    for (auto& x : w) x = letter(rng);
    return u->pbw_normal_form(w) + u->pbw_normal_form({letter(rng)}, Rational(2));
  };
  for (int t = 0; t < 50; ++t) {
    auto a = rnd(), b = rnd();
    EXPECT_EQ(moment_map(a * b, act), weyl_mul(moment_map(a, act), moment_map(b, act)));
  }
}

TEST(Stabilizer, IdentityIsDiagonal) {
  auto st = stabilizer_subalgebra(builtin_lr_action_sl2(), pt("1,0,0,1"));
  EXPECT_EQ(st.dim(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    QVector diag = e(i);
    diag[i + 3] = 1;
    EXPECT_TRUE(st.contains(diag));
  }
}

TEST(Stabilizer, DiagonalPointIsTwisted) {
  auto st = stabilizer_subalgebra(builtin_lr_action_sl2(), pt("2,0,0,1/2"));
  EXPECT_EQ(st.dim(), 3u);
  // (x, Ad_{p^-1} x) with p = diag(2, 1/2): E -> E/4, F -> 4F, H -> H.
  QVector ee = e(S::E1), ff = e(S::F1), hh = e(S::H1);
  ee[S::E2] = ratio(1, 4);
  ff[S::F2] = 4;
  hh[S::H2] = 1;
  EXPECT_TRUE(st.contains(ee));
  EXPECT_TRUE(st.contains(ff));
  EXPECT_TRUE(st.contains(hh));
}

TEST(Stabilizer, HorocycleBasePoint) {
  auto st = stabilizer_subalgebra(builtin_lr_action_horocycle(), pt("1,0,0,0"));
  // The rank of the 4 x 6 evaluation matrix is 3 = dim Y, so the kernel is 3-dimensional.
  EXPECT_EQ(rank(builtin_lr_action_horocycle().evaluation_matrix(pt("1,0,0,0").vec())), 3u);
  EXPECT_EQ(st.dim(), 3u);
  QVector h = e(S::H1);
  h[S::H2] = 1;
  EXPECT_TRUE(st.contains(e(S::E1)));
  EXPECT_TRUE(st.contains(e(S::F2)));
  EXPECT_TRUE(st.contains(h));
}

TEST(Stabilizer, RejectsPointsOffTheVariety) {
  EXPECT_THROW(stabilizer_subalgebra(builtin_lr_action_sl2(), pt("1,1,1,1")), PointError);
  EXPECT_THROW(stabilizer_subalgebra(builtin_lr_action_horocycle(), pt("0,0,0,0")), PointError);
  EXPECT_THROW(localization_fiber(matrix_coefficient_bimodule(0, 0), pt("2,0,0,2")), PointError);
}

TEST(Stabilizer, DimensionThreeAcrossSl2Points) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> v(-4, 4);
  auto act = builtin_lr_action_sl2();
  for (int t = 0; t < 30; ++t) {
    // Random product of a diagonal and unipotent matrices.
    Rational s = ratio(v(rng) == 0 ? 3 : v(rng), 2), u1(v(rng)), u2 = ratio(v(rng), 3);
    if (s == 0) s = 1;
    // [[1,u1],[0,1]] * diag(s, 1/s) * [[1,0],[u2,1]]
    Rational a = s + u1 * u2 / s, b = u1 / s, c = u2 / s, d = 1 / s;
    RationalPoint p{{a, b, c, d}};
    ASSERT_EQ(p.det(), 1);
    EXPECT_EQ(stabilizer_subalgebra(act, p).dim(), 3u);
  }
}

TEST(Coinvariants, WorkedExamples) {
  auto g = sl2_pair();
  std::vector<QVector> diag;
  for (std::size_t i = 0; i < 3; ++i) {
    QVector v = e(i);
    v[i + 3] = 1;
    diag.push_back(v);
  }
  LieSubalgebra s(g, diag);
  EXPECT_EQ(coinvariants(matrix_coefficient_bimodule(1, 1), s).dim, 1u);
  EXPECT_EQ(coinvariants(matrix_coefficient_bimodule(1, 0), s).dim, 0u);
  EXPECT_EQ(coinvariants(matrix_coefficient_bimodule(0, 0), s).dim, 1u);
  EXPECT_EQ(coinvariants(matrix_coefficient_bimodule(0, 0), LieSubalgebra(g, {e(0), e(1), e(2)})).dim, 1u);
}

TEST(Coinvariants, RejectsNonNormalizingSubalgebra) {
  auto g = sl2_pair();
  LieSubalgebra n(g, {e(S::E1)});
  LieSubalgebra f(g, {e(S::F1)});
  EXPECT_THROW(coinvariants(matrix_coefficient_bimodule(1, 1), n, f), NormalizerError);
  LieSubalgebra h(g, {e(S::H1)});
  auto r = coinvariants(matrix_coefficient_bimodule(2, 1), n, h);
  EXPECT_EQ(r.dim, 2u);
  ASSERT_EQ(r.induced.size(), 1u);
}

TEST(Localization, MatchesTrivialMultiplicity) {
  std::vector<RationalPoint> pts{pt("1,0,0,1"), pt("2,0,0,1/2"), pt("1,3,0,1"), pt("1,0,-2/3,1"), pt("3,1,2,1")};
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned k = 0; k <= 3; ++k) {
      auto mod = matrix_coefficient_bimodule(m, k);
      for (const auto& p : pts) {
        auto fib = localization_fiber(mod, p);
        EXPECT_EQ(fib.coinvariants.dim, trivial_multiplicity(m, k)) << m << "," << k << " at " << p.to_string();
        EXPECT_TRUE(projection_annihilates(fib.coinvariants, mod.rep(), fib.stabilizer));
      }
    }
}

TEST(Localization, HorocycleFibers) {
  std::vector<RationalPoint> pts{pt("1,0,0,0"), pt("0,1,0,0"), pt("0,0,1,0"), pt("0,0,0,1"), pt("2,3,4,6")};
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned k = 0; k <= 3; ++k) {
      auto mod = matrix_coefficient_bimodule(m, k);
      for (const auto& p : pts) {
        auto fib = localization_fiber(mod, p);
        EXPECT_EQ(fib.stabilizer.dim(), 3u);
        // E1 kills all but the lowest weight of V_m, F2 all but the highest of V_k^*;
        // the Cartan part then forces -m + k = 0.
        EXPECT_EQ(fib.coinvariants.dim, m == k ? 1u : 0u);
        ASSERT_TRUE(fib.cartan.has_value());
        EXPECT_TRUE(projection_annihilates(fib.coinvariants, mod.rep(), fib.stabilizer));
      }
    }
}

TEST(Localization, EulerLiftAtBasePoint) {
  auto act = builtin_lr_action_horocycle();
  auto p = pt("1,0,0,0");
  auto st = stabilizer_subalgebra(act, p);
  auto lift = euler_lift(act, st, p);
  ASSERT_TRUE(lift.has_value());
  // Unique modulo the stabilizer: 1 (x) H.
  QVector diff = *lift;
  diff[S::H2] -= 1;
  EXPECT_TRUE(st.contains(diff));
  auto fib = localization_fiber(matrix_coefficient_bimodule(2, 2), p);
  ASSERT_EQ(fib.coinvariants.induced.size(), 1u);
  // The surviving vector is (lowest of V_2) (x) (highest of V_2^*), on which H2 acts by 2.
  EXPECT_EQ(fib.coinvariants.induced[0], (QMatrix{{Rational(2)}}));
}

TEST(Localization, PointParsing) {
  EXPECT_EQ(pt("2, 0, 0, 1/2").coords[3], ratio(1, 2));
  EXPECT_THROW(pt("1,2,3"), ParseError);
  EXPECT_THROW(pt("1,2,3,4,5"), ParseError);
  EXPECT_EQ(RationalPoint::from_json(pt("1,-1/2,0,3").to_json()), pt("1,-1/2,0,3"));
}
