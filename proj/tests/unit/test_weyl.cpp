#include <gtest/gtest.h>

#include <random>

#include "oracles/poly_oracle.hpp"
#include "oracles/weyl_oracle.hpp"
#include "vinberg/weyl/serialize.hpp"
#include "vinberg/weyl/vector_field.hpp"

using namespace vinberg;
using oracle::P;

namespace {

WeylOp W(const std::string& text) { return parse_weyl(text, oracle::abcd()); }

const QuotientRing kSL2 = QuotientRing::sl2();
const QuotientRing kY = QuotientRing::horocycle();
const Poly kDet = P("a d - b c");

}  // namespace

TEST(Weyl, DefiningRelation) {
  EXPECT_EQ(weyl_mul(W("Da"), W("a")), W("a Da + 1"));
  EXPECT_EQ(weyl_mul(W("Da"), W("b")), W("b Da"));
  EXPECT_EQ(weyl_commutator(W("Da"), W("a")), W("1"));
}

TEST(Weyl, SquareOfNumberOperator) {
  WeylOp n = W("a Da");
  WeylOp sq = weyl_mul(n, n);
  EXPECT_EQ(sq, W("a^2 Da^2 + a Da"));
  // a Da acts on a^k by k, so its square acts by k^2.
  for (int k = 0; k <= 6; ++k) {
    Poly ak = Poly::term(Monomial::unit(4, 0, k), Rational(1));
    EXPECT_EQ(apply(sq, ak), ak * Rational(k * k));
  }
}

TEST(Weyl, ApplyExamples) {
  EXPECT_EQ(apply(W("Da"), P("a^2")), P("2 a"));
  EXPECT_EQ(apply(euler_operator(4), P("1")), P("1"));
  EXPECT_EQ(apply(W("c Da + d Db"), kDet), Poly(4));
}

TEST(Weyl, IsRelative) {
  EXPECT_TRUE(is_relative(W("c Da + d Db"), kDet));
  EXPECT_FALSE(is_relative(W("a Da"), kDet));
  EXPECT_EQ(apply(W("a Da"), kDet), P("a d"));
  EXPECT_TRUE(is_relative(W("a Da - d Dd"), kDet));
  EXPECT_THROW(is_relative(W("Da^2"), kDet), std::invalid_argument);
}

TEST(Weyl, PreservesIdeal) {
  EXPECT_TRUE(preserves_ideal(W("c Da + d Db"), kY));
  EXPECT_FALSE(preserves_ideal(W("a Da"), kSL2));
  EXPECT_TRUE(preserves_ideal(W("a"), kSL2));
  EXPECT_TRUE(preserves_ideal(W("a"), kY));
  // The Euler field rescales ad - bc, so it preserves (ad - bc) but not (ad - bc - 1).
  EXPECT_TRUE(preserves_ideal(W("a Da + b Db + c Dc + d Dd"), kY));
  EXPECT_FALSE(preserves_ideal(W("a Da + b Db + c Dc + d Dd"), kSL2));
  // Second-order operator: Da Dd - Db Dc kills ad - bc only up to a constant.
  EXPECT_FALSE(preserves_ideal(W("Da Dd - Db Dc"), kY));
}

TEST(Weyl, ProductMatchesRewritingOracle) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 150; ++i) {
    WeylOp p = oracle::random_weyl(rng, 2, 2, 3);
    WeylOp q = oracle::random_weyl(rng, 2, 2, 3);
    EXPECT_EQ(weyl_mul(p, q), oracle::rewrite_mul(p, q));
  }
}

TEST(Weyl, Associativity) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    WeylOp p = oracle::random_weyl(rng, 2, 2, 3);
    WeylOp q = oracle::random_weyl(rng, 2, 2, 3);
    WeylOp r = oracle::random_weyl(rng, 2, 2, 3);
    EXPECT_EQ(weyl_mul(weyl_mul(p, q), r), weyl_mul(p, weyl_mul(q, r)));
  }
}

TEST(Weyl, JacobiForVectorFields) {
  std::mt19937_64 rng(2);
  auto random_field = [&] {
    std::vector<Poly> coeffs;
    for (int i = 0; i < 4; ++i) coeffs.push_back(oracle::random_poly(rng, 2, 3));
    return WeylOp::vector_field(coeffs);
  };
  for (int i = 0; i < 50; ++i) {
    WeylOp x = random_field(), y = random_field(), z = random_field();
    WeylOp j = weyl_commutator(x, weyl_commutator(y, z)) + weyl_commutator(y, weyl_commutator(z, x)) +
               weyl_commutator(z, weyl_commutator(x, y));
    EXPECT_TRUE(j.is_zero());
    EXPECT_TRUE(weyl_commutator(x, y).is_vector_field());
  }
}

TEST(Weyl, ApplyIntertwinesProduct) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 80; ++i) {
    WeylOp p = oracle::random_weyl(rng, 2, 2, 3);
    WeylOp q = oracle::random_weyl(rng, 2, 2, 3);
    Poly f = oracle::random_poly(rng, 4, 5);
    EXPECT_EQ(apply(weyl_mul(p, q), f), apply(p, apply(q, f)));
  }
}

TEST(Weyl, LaurentApplication) {
  Poly inv = Poly::term(Monomial{-1, 0, 0, 0}, Rational(1));
  EXPECT_EQ(apply(W("Da"), inv), Poly::term(Monomial{-2, 0, 0, 0}, Rational(-1)));
}

TEST(Weyl, LinearRelativeFieldsAreSixDimensional) {
  auto kernel = relative_fields_of_degree(kDet, 1);
  EXPECT_EQ(kernel.size(), 6u);
  std::vector<WeylOp> six{W("c Da + d Db"), W("b Da + d Dc"), W("a Da - d Dd"),
                          W("b Db - c Dc"), W("a Db + c Dd"), W("a Dc + b Dd")};
  for (const auto& f : six) EXPECT_TRUE(is_relative(f, kDet));
  EXPECT_EQ(operator_span_rank(six), 6u);
  auto both = six;
  both.insert(both.end(), kernel.begin(), kernel.end());
  EXPECT_EQ(operator_span_rank(both), 6u);
}

TEST(Weyl, SerializeRoundTrip) {
  WeylOp op = W("-1/2 a^2 Db + c Da Dd + 3");
  std::string text = to_text(op, oracle::abcd());
  EXPECT_EQ(parse_weyl(text, oracle::abcd()), op);
  EXPECT_EQ(weyl_from_json(to_json(op), 4), op);
  EXPECT_EQ(to_text(W("Da"), oracle::abcd()), "1 * a^0 b^0 c^0 d^0 * Da^1 Db^0 Dc^0 Dd^0");
}
