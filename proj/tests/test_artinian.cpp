#include <gtest/gtest.h>

#include <random>

#include "germcalc/artinian.hpp"
#include "test_support.hpp"

using namespace germcalc;
using germcalc::testing::ideal;
using germcalc::testing::poly;
using germcalc::testing::ring;

namespace {

std::int64_t euler(const std::vector<std::uint64_t>& h) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(h[i]);
  return chi;
}

Polynomial randomPoly(const RingPtr& r, std::mt19937& rng, std::uint32_t minDeg, std::uint32_t maxDeg) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::vector<Term> terms;
  const std::size_t n = r->variableCount();
  auto rec = [&](auto&& self, std::size_t var, Monomial::Exponents& e, std::uint32_t left) -> void {
    if (var == n) {
      Monomial m(e);
      if (m.degree() >= minDeg && coef(rng) % 3 == 0) terms.push_back(Term{m, r->scalar(coef(rng))});
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      e[var] = a;
      self(self, var + 1, e, left - a);
    }
    e[var] = 0;
  };
  Monomial::Exponents e(n, 0);
  rec(rec, 0, e, maxDeg);
  return Polynomial::fromTerms(r, terms);
}

}  // namespace

TEST(Artinian, BasisAndTables) {
  auto r = ring({"x", "y"});
  ArtinianAlgebra R(ideal(r, "x^2, y^2"));
  EXPECT_EQ(R.dimension(), 4u);
  ASSERT_EQ(R.multiplicationTables().size(), 2u);
  const auto& X = R.multiplicationTables()[0];
  EXPECT_FALSE(X.isZero());
  EXPECT_TRUE((X * X).isZero());
  EXPECT_THROW(ArtinianAlgebra(ideal(r, "x^2")), std::invalid_argument);
}

TEST(Artinian, LocalUnitsAreInvertedExactly) {
  auto r = ring({"x"});
  // O_1 / <x^3>: (1 + x) * (1 - x + x^2) = 1 modulo x^3
  ArtinianAlgebra R(ideal(r, "x^3 + x^4"));
  EXPECT_EQ(R.dimension(), 3u);
  auto prod = R.multiplication(poly(r, "1 + x")) * R.multiplication(poly(r, "1 - x + x^2"));
  EXPECT_EQ(prod, DenseMatrix::identity(r->field(), 3));
}

TEST(Artinian, MultiplicationIsARingMap) {
  auto r = ring({"x", "y", "z"}, Field::prime(32003));
  ArtinianAlgebra R(ideal(r, "x^2 + y*z, y^3 - x*z, z^2 + x*y - x^3"));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial p = randomPoly(r, rng, 0, 3), q = randomPoly(r, rng, 0, 3);
    EXPECT_EQ(R.multiplication(p) * R.multiplication(q), R.multiplication(p * q));
    EXPECT_EQ(R.multiplication(p) + R.multiplication(q), R.multiplication(p + q));
  }
}

TEST(Koszul, SmallExamples) {
  auto r2 = ring({"x", "y"});
  EXPECT_EQ(koszulTor(ideal(r2, "x, y"), ideal(r2, "x^2, y^2")), (std::vector<std::uint64_t>{1, 2, 1}));
  auto r1 = ring({"x"});
  EXPECT_EQ(koszulTor(ideal(r1, "x"), ideal(r1, "x")), (std::vector<std::uint64_t>{1, 1}));
}

// Tor_0 is the colength of I + J; Tor_1 agrees with (I cap J)/(I J); the
// Euler characteristic vanishes.
TEST(Koszul, RandomInstancesAgreeAcrossRoutes) {
  std::mt19937 rng(31);
  for (std::size_t n : {2u, 3u}) {
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(n);
    auto r = ring(names, Field::prime(32003));
    for (int trial = 0; trial < 4; ++trial) {
      Ideal I;
      while (I.size() < 2) {
        Polynomial g = randomPoly(r, rng, 2, 3);
        if (!g.isZero()) I.push_back(g);
      }
      Ideal J;
      for (std::size_t v = 0; v < n; ++v)
        J.push_back(Polynomial::variable(r, v).pow(3) + randomPoly(r, rng, 2, 3));
      if (!colength(r, J).isFinite()) continue;
      auto tor = koszulTor(I, J);
      EXPECT_EQ(euler(tor), 0);
      EXPECT_EQ(ExtendedNat(tor[0]), colength(r, sum(I, J)));
      EXPECT_EQ(ExtendedNat(tor[1]), subquotientColength(Subquotient(intersect(I, J), product(I, J))))
          << "n=" << n << " trial " << trial;
    }
  }
}
