#include <gtest/gtest.h>

#include <random>

#include "oracles/poly_oracle.hpp"
#include "vinberg/exactalg/level.hpp"
#include "vinberg/exactalg/serialize.hpp"

using namespace vinberg;
using oracle::P;

namespace {

const QuotientRing kSL2 = QuotientRing::sl2();
const QuotientRing kY = QuotientRing::horocycle();
const QuotientRing kMat = QuotientRing::mat2();
const Poly kDet = P("a d - b c");

}  // namespace

TEST(Rational, ParsesCanonically) {
  EXPECT_EQ(parse_rational("6/4"), ratio(3, 2));
  EXPECT_EQ(parse_rational(" -2/6 "), ratio(-1, 3));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(to_string(parse_rational("-3/9")), "-1/3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
}

TEST(Monomial, DegLexMakesAdLeading) {
  Poly rel = QuotientRing::det_minus(1);
  EXPECT_EQ(rel.leading_monomial(), (Monomial{1, 0, 0, 1}));
  EXPECT_EQ(kSL2.lead(), (Monomial{1, 0, 0, 1}));
  EXPECT_EQ(kY.lead(), (Monomial{1, 0, 0, 1}));
}

TEST(Monomial, ArityMismatchThrows) {
  EXPECT_THROW(Monomial({1, 0}) * Monomial({1, 0, 0}), ArityError);
  EXPECT_THROW(kSL2.normal_form(Poly::constant(3, Rational(1))), ArityError);
}

TEST(Monomial, CountsOfMonomials) {
  EXPECT_EQ(monomials_of_degree(4, 3).size(), 20u);
  EXPECT_EQ(monomials_up_to_degree(4, 6).size(), 210u);
  EXPECT_TRUE(monomials_of_degree(4, -1).empty());
}

TEST(NormalForm, WorkedExamples) {
  EXPECT_EQ(kSL2.normal_form(P("a d")), P("b c + 1"));
  EXPECT_EQ(kY.normal_form(P("a d")), P("b c"));
  // Frozen from the substitution oracle, matches the expansion of (bc+1)^2.
  Poly expected = P("b^2 c^2 + 2 b c + 1");
  EXPECT_EQ(oracle::substitute_ad(P("a^2 d^2"), 1), expected);
  EXPECT_EQ(kSL2.normal_form(P("a^2 d^2")), expected);
  EXPECT_EQ(kMat.normal_form(P("a^2 d^2")), P("a^2 d^2"));
}

TEST(NormalForm, AgreesWithSubstitutionOracle) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) {
    Poly f = oracle::random_poly(rng, 6, 6);
    EXPECT_EQ(kSL2.normal_form(f), oracle::substitute_ad(f, 1));
    EXPECT_EQ(kY.normal_form(f), oracle::substitute_ad(f, 0));
  }
}

TEST(NormalForm, IdempotentAndMultiplicative) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 150; ++i) {
    Poly f = oracle::random_poly(rng, 4, 5);
    Poly g = oracle::random_poly(rng, 3, 5);
    for (const auto* r : {&kSL2, &kY}) {
      Poly nf = r->normal_form(f);
      EXPECT_EQ(r->normal_form(nf), nf);
      EXPECT_EQ(r->normal_form(f * g), r->normal_form(nf * r->normal_form(g)));
      for (const auto& [m, c] : nf.terms()) EXPECT_TRUE(r->is_normal(m));
    }
  }
}

TEST(Level, WorkedExamples) {
  EXPECT_EQ(pw_level(P("a"), kSL2), LevelValue::of(1));
  EXPECT_EQ(pw_level(P("1"), kSL2), LevelValue::of(0));
  EXPECT_EQ(pw_level(P("a d"), kSL2), LevelValue::of(2));
  EXPECT_EQ(pw_level(P("a d - b c"), kSL2), LevelValue::of(0));
  EXPECT_EQ(pw_level(P("a d - b c - 1"), kSL2), LevelValue::bot());
  EXPECT_EQ(pw_level(Poly(4), kSL2), LevelValue::bot());
  EXPECT_EQ(pw_level(P("a d - b c"), kY), LevelValue::bot());
  EXPECT_EQ(pw_level(P("a^3 + b"), kMat), LevelValue::of(3));
}

TEST(Level, OracleSearchConfirmsNoLowerRepresentative) {
  // ad: no degree-0 representative in ad + (ad - bc - 1).
  EXPECT_EQ(detail::min_degree_by_search(P("a d"), kSL2), 2);
  EXPECT_EQ(detail::min_degree_by_search(P("a^2 d^2 - 2 a b c d + b^2 c^2"), kSL2), 0);
  EXPECT_EQ(detail::min_degree_by_search(P("a^2 d - a b c"), kSL2), 1);
}

TEST(Level, NormalFormMinimalityValidated) {
  EXPECT_TRUE(detail::sl2_normal_form_is_minimal());
  for (int k = 0; k <= 6; ++k) EXPECT_TRUE(detail::normal_form_minimality_holds(kY, k));
}

TEST(Level, NormalFormDegreeMatchesSearchOnRandomClasses) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    Poly f = oracle::random_poly(rng, 4, 4) + oracle::random_poly(rng, 2, 2) * P("a d - b c - 1");
    auto lvl = pw_level(f, kSL2);
    int expected = detail::min_degree_by_search(f, kSL2);
    if (expected < 0) {
      EXPECT_TRUE(lvl.is_bottom());
    } else {
      EXPECT_EQ(lvl, LevelValue::of(expected));
    }
  }
}

TEST(Level, Subadditive) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Poly f = oracle::random_poly(rng, 3, 4);
    Poly g = oracle::random_poly(rng, 3, 4);
    auto lf = pw_level(f, kSL2), lg = pw_level(g, kSL2), lfg = pw_level(f * g, kSL2), ls = pw_level(f + g, kSL2);
    if (lf.is_bottom() || lg.is_bottom()) continue;
    if (!lfg.is_bottom()) EXPECT_LE(lfg.scalar(), lf.scalar() + lg.scalar());
    if (!ls.is_bottom()) EXPECT_LE(ls.scalar(), std::max(lf.scalar(), lg.scalar()));
  }
}

TEST(Level, ParityProfile) {
  auto prof = pw_level_profile(P("a d + b"), kSL2);
  ASSERT_EQ(prof.size(), 2u);
  EXPECT_EQ(prof[0], LevelValue::of(2));
  EXPECT_EQ(prof[1], LevelValue::of(1));
}

TEST(VanishingOrder, WorkedExamples) {
  EXPECT_EQ(vanishing_order(kDet * kDet, kDet), 2u);
  EXPECT_EQ(vanishing_order(P("a b"), kDet), 0u);
  EXPECT_EQ(vanishing_order(kDet * P("a"), kDet), 1u);
  EXPECT_EQ(vanishing_order(Poly(4), kDet), std::nullopt);
  // Division oracle: ab leaves a nonzero remainder.
  EXPECT_FALSE(divide(P("a b"), kDet).remainder.is_zero());
}

TEST(VanishingOrder, AdditiveOnProducts) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    Poly f = oracle::random_poly(rng, 3, 3) * kDet.pow(i % 3);
    Poly g = oracle::random_poly(rng, 3, 3) * kDet.pow(i % 2);
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_EQ(*vanishing_order(f * g, kDet), *vanishing_order(f, kDet) + *vanishing_order(g, kDet));
  }
}

TEST(Division, ReconstructsDividend) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Poly f = oracle::random_poly(rng, 5, 6);
    auto r = divide(f, kDet);
    EXPECT_EQ(r.quotient * kDet + r.remainder, f);
  }
}

TEST(Serialize, TextRoundTrip) {
  Poly f = P("3/2 a^2 d - b c + 7");
  std::string text = to_text(f, oracle::abcd());
  EXPECT_EQ(text, "3/2 * a^2 b^0 c^0 d^1 + -1 * a^0 b^1 c^1 d^0 + 7 * a^0 b^0 c^0 d^0");
  EXPECT_EQ(parse_poly(text, oracle::abcd()), f);
  EXPECT_EQ(to_text(Poly(4), oracle::abcd()), "0");
  EXPECT_EQ(parse_poly("0", oracle::abcd()), Poly(4));
  EXPECT_THROW(parse_poly("a + q", oracle::abcd()), ParseError);
  EXPECT_THROW(parse_poly("a +", oracle::abcd()), ParseError);
}

TEST(Serialize, JsonRoundTrip) {
  Poly f = P("-1/3 a b^2 + c");
  json j = to_json(f);
  EXPECT_EQ(j[0]["coef"], "-1/3");
  EXPECT_EQ(poly_from_json(j, 4), f);
}

TEST(LinAlg, RankRoutesAgree) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> v(-2, 2);
  for (int t = 0; t < 50; ++t) {
    QMatrix m(5, 7);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 7; ++j) m(i, j) = ratio(v(rng), 1 + (t % 3));
    if (t % 4 == 0) {
      for (std::size_t j = 0; j < 7; ++j) m(4, j) = m(0, j) * 2 - m(1, j);
    }
    std::size_t r = rank(m);
    EXPECT_EQ(rank_bareiss(m), r);
    SparseEchelon e;
    for (std::size_t i = 0; i < 5; ++i) e.insert(to_sparse(m.row(i)));
    EXPECT_EQ(e.rank(), r);
    for (const auto& k : nullspace(m)) {
      auto z = m.apply(k);
      for (const auto& x : z) EXPECT_EQ(x, 0);
    }
    EXPECT_EQ(nullspace(m).size() + r, 7u);
  }
}

TEST(LinAlg, CharPoly) {
  QMatrix m{{Rational(2), Rational(1)}, {Rational(0), Rational(3)}};
  auto c = char_poly(m);
  EXPECT_EQ(c, (std::vector<Rational>{6, -5, 1}));
}
