#include <gtest/gtest.h>

#include <map>
#include <random>

#include "vinberg/asymptotics/exponents.hpp"

using namespace vinberg;

namespace {

QMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  QMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long x : row) m(r, c++) = Rational(x);
    ++r;
  }
  return m;
}

/// Inverse of I + N for strictly lower triangular N: sum of (-N)^k.
QMatrix unipotent_inverse(const QMatrix& l) {
  std::size_t n = l.rows();
  QMatrix neg_n = QMatrix::identity(n) - l;
  QMatrix out = QMatrix::identity(n), pw = QMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    pw = pw * neg_n;
    out += pw;
  }
  return out;
}

}  // namespace

TEST(JordanExponents, SyntheticBlocks) {
  QMatrix a(3, 3);
  a(0, 0) = ratio(-1, 2);
  a(1, 1) = Rational(3);
  a(2, 2) = Rational(3);
  a(1, 2) = Rational(1);
  EXPECT_EQ(jordan_exponents(a), (ExponentSet{{ratio(-1, 2), 0}, {Rational(3), 1}}));
  EXPECT_EQ(jordan_exponents(from_ints({{0, 1}, {0, 0}})), (ExponentSet{{Rational(0), 1}}));
  EXPECT_EQ(jordan_exponents(QMatrix::identity(3)), (ExponentSet{{Rational(1), 0}, {Rational(1), 0}, {Rational(1), 0}}));
  EXPECT_TRUE(jordan_exponents(QMatrix(0, 0)).empty());
}

TEST(JordanExponents, IrrationalSpectrumThrows) {
  EXPECT_THROW(jordan_exponents(from_ints({{0, 1}, {2, 0}})), SplittingError);
  EXPECT_THROW(jordan_exponents(from_ints({{0, -1}, {1, 0}})), SplittingError);
}

TEST(JordanExponents, RationalRoots) {
  // (x - 1/2)^2 (x + 3) = x^3 + 2x^2 - 11/4 x + 3/4
  auto roots = detail::rational_roots({ratio(3, 4), ratio(-11, 4), Rational(2), Rational(1)});
  std::map<Rational, unsigned> got(roots.begin(), roots.end());
  EXPECT_EQ(got, (std::map<Rational, unsigned>{{Rational(-3), 1}, {ratio(1, 2), 2}}));
}

TEST(JordanExponents, ConjugationInvariantWithTriangularOracle) {
  // Upper triangular T: eigenvalues are the diagonal. Conjugating by a unit
  // lower triangular L must keep the Jordan data; the total block size per
  // eigenvalue must equal its diagonal multiplicity.
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> diag(-2, 2), off(-2, 2), size(1, 5);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = size(rng);
    QMatrix tri(n, n), l = QMatrix::identity(n);
    std::map<Rational, unsigned> mult;
    for (std::size_t i = 0; i < n; ++i) {
      tri(i, i) = ratio(diag(rng), 2);
      ++mult[tri(i, i)];
      for (std::size_t j = i + 1; j < n; ++j) tri(i, j) = Rational(off(rng));
      for (std::size_t j = 0; j < i; ++j) l(i, j) = Rational(off(rng));
    }
    ExponentSet base = jordan_exponents(tri);
    EXPECT_EQ(jordan_exponents(l * tri * unipotent_inverse(l)), base);
    std::map<Rational, unsigned> total;
    for (const auto& e : base) total[e.lambda] += e.log_power + 1;
    EXPECT_EQ(total, mult);
  }
}

TEST(Exponents, SymPowersHaveTheLowestWeight) {
  for (unsigned m = 0; m <= 6; ++m) {
    auto r = leading_exponent_result(m);
    EXPECT_TRUE(r.report.pass()) << r.report.to_json().dump(2);
    EXPECT_EQ(r.coinv.exponents, (ExponentSet{{Rational(-static_cast<long>(m)), 0}}));
    std::set<long> weights;
    for (long i = 0; i <= static_cast<long>(m); ++i) weights.insert(static_cast<long>(m) - 2 * i);
    EXPECT_EQ(r.oracle, weights);
    EXPECT_EQ(r.leading, -static_cast<long>(m));
  }
}

TEST(Exponents, TextAndJson) {
  auto r = leading_exponent_result(2);
  EXPECT_EQ(exponent_set_text(r.coinv.exponents), "{(-2,0)}");
  EXPECT_EQ(integer_set_text(r.oracle), "{-2, 0, 2}");
  EXPECT_EQ(r.to_json()["leading"], -2);
  EXPECT_EQ(matrix_coefficient_exponents(3), (std::set<long>{-3, -1, 1, 3}));
}

TEST(RealFormData, RejectsNonNormalizingCartan) {
  auto g = LieAlgebraDesc::sl2();
  RealFormData bad{g.basis_vector(LieAlgebraDesc::kH), g.basis_vector(LieAlgebraDesc::kE), -1};
  EXPECT_THROW(bad.validate(g), std::invalid_argument);
  EXPECT_THROW(coinvariant_exponents(sym_power_rep(2), bad), std::invalid_argument);
}
