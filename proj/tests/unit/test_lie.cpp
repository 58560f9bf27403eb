#include <gtest/gtest.h>

#include <random>

#include "oracles/pbw_oracle.hpp"
#include "vinberg/lie/rep.hpp"

using namespace vinberg;

namespace {

constexpr std::size_t F = LieAlgebraDesc::kF, H = LieAlgebraDesc::kH, E = LieAlgebraDesc::kE;

oracle::WordSum words_of(const UEnvElement& u) {
  oracle::WordSum out;
  for (const auto& [m, c] : u.terms()) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < m.arity(); ++i)
      for (int e = 0; e < m[i]; ++e) w.push_back(i);
    out[w] = c;
  }
  return out;
}

}  // namespace

TEST(LieAlgebra, Sl2Brackets) {
  auto g = LieAlgebraDesc::sl2();
  EXPECT_EQ(g.names(), (std::vector<std::string>{"F", "H", "E"}));
  EXPECT_EQ(g.bracket(g.basis_vector(E), g.basis_vector(F)), g.basis_vector(H));
  EXPECT_EQ(g.bracket(g.basis_vector(H), g.basis_vector(E)), (QVector{0, 0, 2}));
}

TEST(LieAlgebra, RejectsBadConstants) {
  LieAlgebraDesc::Constants c(2, std::vector<QVector>(2, QVector(2, Rational(0))));
  c[0][1][0] = 1;  // not antisymmetric
  EXPECT_THROW(LieAlgebraDesc({"x", "y"}, c), std::invalid_argument);
  // Antisymmetric but violating Jacobi: [x,y]=z, [y,z]=x, [z,x]=x.
  LieAlgebraDesc::Constants j(3, std::vector<QVector>(3, QVector(3, Rational(0))));
  auto set = [&](int a, int b, int k) {
    j[a][b][k] = 1;
    j[b][a][k] = -1;
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 0);
  EXPECT_THROW(LieAlgebraDesc({"x", "y", "z"}, j), std::invalid_argument);
}

TEST(LieAlgebra, JsonRoundTrip) {
  auto g = LieAlgebraDesc::direct_sum(LieAlgebraDesc::sl2(), LieAlgebraDesc::sl2());
  EXPECT_EQ(LieAlgebraDesc::from_json(g.to_json()), g);
  EXPECT_EQ(g.names()[3], "F2");
}

TEST(Subalgebra, ValidatesClosure) {
  auto g = LieAlgebraDesc::sl2();
  EXPECT_NO_THROW(LieSubalgebra(g, {g.basis_vector(H), g.basis_vector(E)}));
  EXPECT_THROW(LieSubalgebra(g, {g.basis_vector(F), g.basis_vector(E)}), std::invalid_argument);
  EXPECT_THROW(LieSubalgebra(g, {g.basis_vector(E), g.basis_vector(E)}), std::invalid_argument);
  LieSubalgebra n(g, {g.basis_vector(E)});
  LieSubalgebra h(g, {g.basis_vector(H)});
  EXPECT_TRUE(n.normalized_by(h));
  EXPECT_FALSE(h.normalized_by(n));
}

TEST(UEnv, WorkedExamples) {
  auto u = uenv_sl2();
  EXPECT_EQ(u->pbw_normal_form({E, F}), u->pbw_normal_form({F, E}) + u->generator(H));
  EXPECT_EQ(u->pbw_normal_form({H, E}), u->pbw_normal_form({E, H}) + u->generator(E) * Rational(2));
  auto delta = casimir_sl2(u);
  EXPECT_TRUE((delta * u->generator(E) - u->generator(E) * delta).is_zero());
}

TEST(UEnv, CasimirPbwForm) {
  auto u = uenv_sl2();
  auto expected = u->one() + u->pbw_normal_form({H, H}) + u->pbw_normal_form({F, E}, 4) + u->generator(H) * Rational(2);
  EXPECT_EQ(casimir_sl2(u), expected);
  EXPECT_TRUE(is_central(casimir_sl2(u)));
  EXPECT_FALSE(is_central(u->generator(E)));
  EXPECT_TRUE(is_central(u->one()));
}

TEST(UEnv, ConfluenceUnderRandomRewriteOrders) {
  auto g = LieAlgebraDesc::direct_sum(LieAlgebraDesc::sl2(), LieAlgebraDesc::sl2());
  auto u = UEnv::make(g);
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> letter(0, g.dim() - 1), len(0, 5);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::size_t> w(len(rng));
    for (auto& x : w) x = letter(rng);
    auto nf = words_of(u->pbw_normal_form(w));
    EXPECT_EQ(oracle::random_order_pbw(g, w, rng), nf);
    EXPECT_EQ(oracle::random_order_pbw(g, w, rng), nf);
  }
}

TEST(UEnv, Associativity) {
  auto u = uenv_sl2();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> letter(0, 2), len(0, 3);
  auto rnd = [&] {
    std::vector<std::size_t> w(len(rng));
    for (auto& x : w) x = letter(rng);
    return u->pbw_normal_form(w, Rational(static_cast<long>(len(rng)) - 1));
  };
  for (int t = 0; t < 60; ++t) {
    auto a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(UEnv, TensorFactorsCommute) {
  auto u = uenv_sl2_pair();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) EXPECT_TRUE(u->commutator(u->generator(i), u->generator(j)).is_zero());
  EXPECT_TRUE(is_central(casimir_sl2(u, 0)));
  EXPECT_TRUE(is_central(casimir_sl2(u, 3)));
}

TEST(Rep, SymPowers) {
  auto v0 = sym_power_rep(0);
  EXPECT_EQ(v0.dim(), 1u);
  for (const auto& m : v0.matrices()) EXPECT_TRUE(m.is_zero());
  auto v1 = sym_power_rep(1);
  EXPECT_EQ(v1.matrix(H), (QMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}));
  auto v2 = sym_power_rep(2);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(v2.matrix(H)(i, i), Rational(2 - 2 * i));
  EXPECT_EQ(commutator(v2.matrix(E), v2.matrix(F)), v2.matrix(H));
}

TEST(Rep, CasimirScalar) {
  auto u = uenv_sl2();
  auto delta = casimir_sl2(u);
  for (unsigned m = 0; m <= 6; ++m) {
    auto v = sym_power_rep(m);
    EXPECT_EQ(v.act(delta), QMatrix::identity(m + 1) * Rational((m + 1) * (m + 1)));
  }
  // Direct evaluation of 1 + H^2 + 2EF + 2FE on the standard matrices.
  auto v1 = sym_power_rep(1);
  QMatrix d = QMatrix::identity(2) + v1.matrix(H) * v1.matrix(H) + v1.matrix(E) * v1.matrix(F) * Rational(2) +
              v1.matrix(F) * v1.matrix(E) * Rational(2);
  EXPECT_EQ(d, QMatrix::identity(2) * Rational(4));
}

TEST(Rep, RejectsNonRepresentation) {
  auto v1 = sym_power_rep(1);
  auto mats = v1.matrices();
  mats[H] = mats[H] * Rational(2);
  EXPECT_THROW(FinDimRep(v1.lie(), 2, mats), std::invalid_argument);
}

TEST(Rep, DualAndExternalTensor) {
  auto d1 = dual_rep(sym_power_rep(1));
  EXPECT_EQ(d1.matrix(H), (QMatrix{{Rational(-1), Rational(0)}, {Rational(0), Rational(1)}}));
  auto m = external_tensor(sym_power_rep(1), d1);
  EXPECT_EQ(m.dim(), 4u);
  EXPECT_TRUE(m.actions_commute());
  auto z = external_tensor(sym_power_rep(0), sym_power_rep(0));
  EXPECT_EQ(z.dim(), 1u);
  for (const auto& x : z.rep().matrices()) EXPECT_TRUE(x.is_zero());
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b) EXPECT_TRUE(matrix_coefficient_bimodule(a, b).actions_commute());
}

TEST(Rep, JsonRoundTrip) {
  auto v = sym_power_rep(3);
  auto w = FinDimRep::from_json(v.to_json());
  EXPECT_EQ(w.matrices(), v.matrices());
}
