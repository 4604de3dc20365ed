#include <gtest/gtest.h>

#include <random>

#include "germcalc/errors.hpp"
#include "germcalc/linalg.hpp"
#include "test_support.hpp"

using namespace germcalc;
using germcalc::testing::poly;
using germcalc::testing::ring;

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f = Field::prime(7);
  Scalar a(f, 3), b(f, 5);
  EXPECT_EQ(a + b, Scalar(f, 1));
  EXPECT_EQ(a * b, Scalar(f, 1));
  EXPECT_EQ(a / b, Scalar(f, 2));
  EXPECT_EQ(-a, Scalar(f, 4));
  EXPECT_THROW(Scalar(f, 1, 7), std::domain_error);
  EXPECT_THROW(Field::prime(8), std::invalid_argument);
}

TEST(Scalar, RationalsAndParse) {
  const Field q = Field::rationals();
  EXPECT_EQ(Scalar(q, 1, 2) + Scalar(q, 1, 3), Scalar(q, 5, 6));
  EXPECT_EQ(Field::parse("Fp").characteristic(), 32003u);
  EXPECT_EQ(Field::parse("Fp:101").toString(), "Fp:101");
  EXPECT_EQ(Field::parse("Q").toString(), "Q");
}

TEST(Ordering, LocalDegRevLex) {
  const auto ds = MonomialOrdering::localNegDegRevLex(3);
  // lower degree is larger
  EXPECT_GT(ds.compare(Monomial{1, 0, 0}, Monomial{2, 0, 0}), 0);
  EXPECT_GT(ds.compare(Monomial{0, 0, 0}, Monomial{0, 0, 1}), 0);
  // same degree: last differing variable, smaller exponent wins
  EXPECT_GT(ds.compare(Monomial{2, 0, 0}, Monomial{1, 0, 1}), 0);
  EXPECT_GT(ds.compare(Monomial{0, 2, 0}, Monomial{1, 0, 1}), 0);
  const auto dp = MonomialOrdering::globalDegRevLex(3);
  EXPECT_LT(dp.compare(Monomial{1, 0, 0}, Monomial{2, 0, 0}), 0);
  EXPECT_TRUE(ds.isLocal());
  EXPECT_FALSE(dp.isLocal());
  EXPECT_FALSE(MonomialOrdering::eliminationBlock(1, 3).isLocal());
  EXPECT_TRUE(MonomialOrdering::eliminationBlock(1, 3).hasLocalFinalBlock());
}

TEST(Ordering, TotalAndMultiplicativeOnRandomMonomials) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::uint32_t> e(0, 4);
  const std::vector<MonomialOrdering> orders = {
      MonomialOrdering::localNegDegRevLex(4), MonomialOrdering::globalDegRevLex(4),
      MonomialOrdering::eliminationBlock(2, 4),
      MonomialOrdering::product(4, {{0, 1, BlockKind::Local}, {1, 3, BlockKind::Global}})};
  auto draw = [&] { return Monomial{e(rng), e(rng), e(rng), e(rng)}; };
  for (const auto& ord : orders) {
    for (int trial = 0; trial < 300; ++trial) {
      Monomial a = draw(), b = draw(), c = draw();
      const int ab = ord.compare(a, b);
      EXPECT_EQ(ab, -ord.compare(b, a));
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ord.compare(a * c, b * c), ab) << ord.describe();
      if (ab > 0 && ord.compare(b, c) > 0) {
        EXPECT_GT(ord.compare(a, c), 0);
      }
    }
  }
}

TEST(Polynomial, ArithmeticAndPrinting) {
  auto r = ring({"x", "y"});
  Polynomial p = poly(r, "(x+y)^3");
  EXPECT_EQ(p, poly(r, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  EXPECT_EQ(p.derivative(0), poly(r, "3*(x+y)^2"));
  EXPECT_EQ(poly(r, "x - x").isZero(), true);
  EXPECT_EQ(poly(r, "-x + 1/2*y^2").toString(), "-x+1/2*y^2");
  EXPECT_EQ(poly(r, "x^2 + x").leadMonomial(), Monomial({1, 0}));  // local: low degree leads
  EXPECT_EQ(poly(r, "x^2*y + 2*x").order(), 1u);
  EXPECT_EQ(poly(r, "x^2*y + 2*x").degree(), 3u);
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  auto r = ring({"x", "y", "z"}, Field::prime(101));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-5, 5), e(0, 3), len(0, 5);
  auto draw = [&] {
    std::vector<Term> terms;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
      terms.push_back(Term{Monomial{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)),
                                    static_cast<std::uint32_t>(e(rng))},
                           r->scalar(coef(rng))});
    return Polynomial::fromTerms(r, terms);
  };
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - b) + b, a);
    EXPECT_EQ((a * b).derivative(1), a.derivative(1) * b + a * b.derivative(1));
    if (!b.isZero()) {
      auto q = (a * b).exactDivide(b);
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(*q, a);
    }
  }
}

TEST(Polynomial, SubstituteAndRemap) {
  auto r = ring({"x", "y"});
  Polynomial p = poly(r, "x^2 - y");
  EXPECT_EQ(p.substitute({poly(r, "x+y"), poly(r, "y")}), poly(r, "x^2 + 2*x*y + y^2 - y"));
  auto big = r->withAuxiliaryVariables({"t"});
  EXPECT_EQ(big->variableCount(), 3u);
  EXPECT_EQ(big->names().front(), "t");
  Polynomial lifted = p.remap(big, {-1, 0, 1});
  EXPECT_EQ(lifted.remap(r, {1, 2}), p);
  EXPECT_FALSE(poly(r, "x^2 + y").exactDivide(poly(r, "x")).has_value());
}

TEST(Parser, ErrorsCarryPositions) {
  auto r = ring({"x", "y"});
  try {
    parsePolynomial("x + w", r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parsePolynomial("x +", r), ParseError);
  EXPECT_THROW(parsePolynomial("x^", r), ParseError);
  EXPECT_THROW(parsePolynomial("(x", r), ParseError);
  auto rp = ring({"x"}, Field::prime(5));
  EXPECT_THROW(parsePolynomial("1/5*x", rp), ParseError);
  EXPECT_EQ(parsePolynomialList("x, y^2, x*y", r).size(), 3u);
  EXPECT_TRUE(parsePolynomialList("   ", r).empty());
}

TEST(Parser, PrintParseRoundTrip) {
  auto r = ring({"x", "y", "z"});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 4), e(0, 3), len(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Term> terms;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
      terms.push_back(Term{Monomial{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)),
                                    static_cast<std::uint32_t>(e(rng))},
                           Scalar(r->field(), coef(rng), den(rng))});
    Polynomial p = Polynomial::fromTerms(r, terms);
    EXPECT_EQ(parsePolynomial(p.toString(), r), p) << p.toString();
  }
}

TEST(Linalg, RankOverBothFields) {
  for (const Field& f : {Field::rationals(), Field::prime(32003)}) {
    DenseMatrix m(f, 3, 3);
    long vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Scalar(f, vals[i][j]);
    EXPECT_EQ(rank(m), 2u);
    EXPECT_EQ(rank(DenseMatrix::identity(f, 4)), 4u);
    EXPECT_EQ(rank(DenseMatrix(f, 2, 5)), 0u);
  }
  // singular mod 5 only
  DenseMatrix a(Field::prime(5), 2, 2), b(Field::rationals(), 2, 2);
  long v[2][2] = {{1, 2}, {3, 11}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = Scalar(Field::prime(5), v[i][j]);
      b(i, j) = Scalar(Field::rationals(), v[i][j]);
    }
  EXPECT_EQ(rank(a), 1u);
  EXPECT_EQ(rank(b), 2u);
}
