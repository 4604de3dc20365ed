#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "germcalc/errors.hpp"
#include "germcalc/oracle.hpp"
#include "germcalc/standard_basis.hpp"
#include "test_support.hpp"

using namespace germcalc;
using germcalc::testing::ideal;
using germcalc::testing::poly;
using germcalc::testing::ring;

namespace {

std::uint64_t oracleValue(const std::vector<Polynomial>& gens, std::uint32_t cap = 14) {
  auto res = oracleColength(gens, cap);
  EXPECT_EQ(res.status, OracleResult::Status::Finite) << res.toString();
  return res.value;
}

std::vector<Polynomial> jacobian(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.ring()->variableCount(); ++i) out.push_back(f.derivative(i));
  return out;
}

}  // namespace

TEST(Oracle, KnownColengths) {
  auto r = ring({"x", "y"});
  EXPECT_EQ(oracleValue(ideal(r, "x^3, y^2")), 6u);
  EXPECT_EQ(oracleValue(ideal(r, "x - x^2, y")), 1u);
  EXPECT_EQ(oracleValue(jacobian(poly(r, "x^3 + x*y^3"))), 7u);
  auto inf = oracleColength(ideal(r, "x^2"), 8);
  EXPECT_EQ(inf.status, OracleResult::Status::Infinite);
}

TEST(Oracle, MonomialAndNonIsolatedIdeals) {
  auto r = ring({"x", "y"});
  auto res = oracleColength(ideal(r, "x^2, x*y, y^2"), 4);
  EXPECT_EQ(res.status, OracleResult::Status::Finite);
  EXPECT_EQ(res.value, 3u);
  EXPECT_EQ(oracleColength(ideal(r, "x"), 10).status, OracleResult::Status::Infinite);
}

TEST(NormalForm, UnitsAndLeadingTerms) {
  auto r = ring({"x", "y"});
  auto nf = [&](const char* v, const char* basis) {
    return moraNormalForm(FreeModuleVector({poly(r, v)}), asVectors(ideal(r, basis)));
  };
  EXPECT_TRUE(nf("y", "y - y^2").isZero());
  EXPECT_EQ(nf("x", "x^2")[0], poly(r, "x"));
  EXPECT_TRUE(nf("x^3", "x^2 - x^3").isZero());
  // the remainder's leading term is divisible by no leading term of the basis
  auto rest = nf("x*y + y^3 + x^4", "x^2 - x^3, x*y");
  EXPECT_EQ(rest[0].leadMonomial(), Monomial({0, 3}));
}

TEST(StandardBasis, LeadingIdealOfWorkedIdeal) {
  auto r = ring({"x", "y", "z"});
  auto sb = standardBasis(r, ideal(r, "x^2 + y^2 + z^2, x^2 - y^2, x*z, y*z"));
  std::set<std::vector<std::uint32_t>> leads, expected = {{2, 0, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 3}};
  for (const auto& lt : sb.leadingModule()) leads.insert({lt.monomial.exponents().begin(), lt.monomial.exponents().end()});
  EXPECT_EQ(leads, expected);
  EXPECT_TRUE(isMember(poly(r, "z^3"), sb));
  EXPECT_FALSE(isMember(poly(r, "z^2"), sb));
  auto gens = standardBasis(r, ideal(r, "x, y"));
  EXPECT_EQ(gens.generators().size(), 2u);
  auto unitFactor = standardBasis(r, ideal(r, "x - x^2, y"));
  std::set<std::vector<std::uint32_t>> lin;
  for (const auto& lt : unitFactor.leadingModule()) lin.insert({lt.monomial.exponents().begin(), lt.monomial.exponents().end()});
  EXPECT_EQ(lin, (std::set<std::vector<std::uint32_t>>{{1, 0, 0}, {0, 1, 0}}));
}

TEST(StandardBasis, MembershipWithInfiniteColength) {
  auto r = ring({"x", "y"});
  auto sb = standardBasis(r, ideal(r, "x - x^2*y"));
  EXPECT_EQ(colength(sb), ExtendedNat::infinite());
  EXPECT_TRUE(isMember(poly(r, "x"), sb));
  EXPECT_TRUE(isMember(poly(r, "x*y^5 + x^3"), sb));
  EXPECT_FALSE(isMember(poly(r, "y"), sb));
  EXPECT_FALSE(isMember(poly(r, "x^2 + y^7"), sb));
  EXPECT_TRUE(isMember(poly(r, "x^2"), standardBasis(r, ideal(r, "x^2"))));
  EXPECT_FALSE(isMember(poly(r, "y"), standardBasis(r, ideal(r, "x"))));
}

TEST(StandardBasis, UnitIdealsAndUnitsInTheLocalRing) {
  auto r = ring({"x", "y"});
  // 1 - x is a unit in the local ring
  EXPECT_EQ(colength(r, ideal(r, "x - x^2, y")), ExtendedNat(1));
  EXPECT_EQ(colength(r, ideal(r, "1 + x, y")), ExtendedNat(0));
  EXPECT_EQ(colength(r, ideal(r, "x^2")), ExtendedNat::infinite());
  // the global origin-free component x = 1 is invisible locally
  EXPECT_EQ(colength(r, ideal(r, "x*(x-1), y")), ExtendedNat(1));
}

TEST(StandardBasis, MilnorNumbersOfSimpleSingularities) {
  auto r = ring({"x", "y"});
  for (int k = 1; k <= 6; ++k) {
    Polynomial f = poly(r, "x^" + std::to_string(k + 1) + " + y^2");
    EXPECT_EQ(colength(r, jacobian(f)), ExtendedNat(k));
  }
  EXPECT_EQ(colength(r, jacobian(poly(r, "x^3 + x*y^3"))), ExtendedNat(7));
  EXPECT_EQ(colength(r, jacobian(poly(r, "x^2*y + y^4"))), ExtendedNat(5));
}

TEST(StandardBasis, WorkedIdealInThreeSpace) {
  auto r = ring({"x", "y", "z"});
  auto I = ideal(r, "x^2 + y^2 + z^2, x^2 - y^2, x*z, y*z");
  EXPECT_EQ(colength(r, I), ExtendedNat(oracleValue(I)));
  EXPECT_EQ(colength(r, I), ExtendedNat(6));
}

TEST(StandardBasis, SVectorsReduceToZero) {
  auto r = ring({"x", "y", "z"});
  auto sb = standardBasis(r, ideal(r, "x^3 + y^2*z - x*y, y^3 - x^2 + z^4, z^2 + x*y*z"));
  const auto& G = sb.generators();
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      EXPECT_TRUE(sb.normalForm(sVector(G[i], G[j])).isZero());
  for (const auto& g : ideal(r, "x^3 + y^2*z - x*y, y^3 - x^2 + z^4, z^2 + x*y*z"))
    EXPECT_TRUE(isMember(g, sb));
}

TEST(StandardBasis, StandardMonomialsOfMonomialIdeal) {
  auto r = ring({"x", "y"});
  auto sb = standardBasis(r, ideal(r, "x^2, x*y, y^3"));
  auto ms = standardMonomials(sb);
  ASSERT_EQ(ms.size(), 4u);
  EXPECT_TRUE(ms.front().isOne());
  EXPECT_EQ(colength(sb), ExtendedNat(4));
}

// Colength of a monomial ideal containing pure powers is the number of
// lattice points below the staircase, counted here by brute force.
TEST(StandardBasis, MonomialIdealsCountStaircase) {
  auto r = ring({"x", "y", "z"}, Field::prime(32003));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> e(0, 5), pure(1, 7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Monomial> gens = {Monomial({pure(rng), 0, 0}), Monomial({0, pure(rng), 0}),
                                  Monomial({0, 0, pure(rng)})};
    for (int i = 0; i < 3; ++i) gens.push_back(Monomial({e(rng), e(rng), e(rng)}));
    std::uint64_t count = 0;
    for (std::uint32_t a = 0; a < 8; ++a)
      for (std::uint32_t b = 0; b < 8; ++b)
        for (std::uint32_t c = 0; c < 8; ++c) {
          Monomial m({a, b, c});
          if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); })) ++count;
        }
    std::vector<Polynomial> I;
    for (const auto& g : gens) I.push_back(Polynomial::monomial(r, g, r->scalar(1)));
    EXPECT_EQ(colength(r, I), ExtendedNat(count)) << trial;
  }
}

TEST(StandardBasis, ModuleColength) {
  auto r = ring({"x", "y"});
  // <(x, y), (y, 0), (0, x^2)> in R^2
  std::vector<FreeModuleVector> gens = {FreeModuleVector({poly(r, "x"), poly(r, "y")}),
                                        FreeModuleVector({poly(r, "y"), poly(r, "0")}),
                                        FreeModuleVector({poly(r, "0"), poly(r, "x^2")})};
  auto sb = standardBasis(r, 2, gens);
  // quotient basis: e1, e2, x*e2, y*e2, x*y*e2 (x*e1 = -y*e2, y^2*e2 lies in the module)
  EXPECT_EQ(colength(sb), ExtendedNat(5));
}

TEST(StandardBasis, GlobalOrderingRejected) {
  auto r = GermRing::create({"x", "y"}, Field::rationals(), MonomialOrdering::globalDegRevLex(2));
  EXPECT_THROW(colength(r, ideal(r, "x, y")), std::invalid_argument);
}

TEST(StandardBasis, DegreeCapRaises) {
  auto r = GermRing::create({"x", "y"}, Field::rationals(), std::nullopt, 4);
  EXPECT_THROW(colength(r, ideal(r, "x^5 + y^7, x*y^6")), DegreeCapExceeded);
}

// Colength is invariant under a random invertible linear change of
// coordinates and under multiplying generators by units; it is checked
// against the dense oracle on random ideals containing a power of m.
TEST(StandardBasis, RandomIdealsAgreeWithOracle) {
  auto r = ring({"x", "y", "z"}, Field::prime(32003));
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-20, 20), e(0, 3), len(1, 4);
  auto draw = [&](int minDeg) {
    std::vector<Term> terms;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      Monomial m{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)),
                 static_cast<std::uint32_t>(e(rng))};
      if (static_cast<int>(m.degree()) < minDeg) continue;
      terms.push_back(Term{m, r->scalar(coef(rng))});
    }
    return Polynomial::fromTerms(r, terms);
  };
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> I = {poly(r, "x^4"), poly(r, "y^4"), poly(r, "z^4")};
    for (int i = 0; i < 3; ++i) I[i] += draw(2);
    I.push_back(draw(1));
    const auto sbValue = colength(r, I);
    auto shuffled = I;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(colength(r, shuffled), sbValue) << trial;
    const auto oracle = oracleColength(I, 12);
    if (oracle.status == OracleResult::Status::Finite) {
      EXPECT_EQ(sbValue, ExtendedNat(oracle.value)) << trial;
    } else {
      // dims[d] is the colength of I + m^d, which the engine computes too
      const std::uint32_t d = static_cast<std::uint32_t>(oracle.dims.size() - 1);
      auto withPower = I;
      for (std::uint32_t a = 0; a <= d; ++a)
        for (std::uint32_t b = 0; a + b <= d; ++b)
          withPower.push_back(Polynomial::monomial(r, Monomial{a, b, d - a - b}, r->scalar(1)));
      EXPECT_EQ(colength(r, withPower), ExtendedNat(oracle.dims[d])) << trial;
      EXPECT_GE(sbValue.value(), oracle.dims[d]) << trial;
    }

    std::vector<Polynomial> changed;
    std::vector<Polynomial> images = {poly(r, "x + 2*y - z"), poly(r, "y + 3*z"), poly(r, "z - x")};
    for (const auto& g : I) changed.push_back(g.substitute(images) * poly(r, "1 + x - y*z"));
    EXPECT_EQ(colength(r, changed), sbValue) << trial;
  }
}

// R^2 / <x e1 + e2, I e1, J e2> is R / (I + x J), since e2 = -x e1. The
// lowest-degree term of the first generator sits in the second component.
TEST(StandardBasis, ModulesWithLowDegreeTailsAgreeWithOracle) {
  auto r = ring({"x", "y", "z"}, Field::prime(32003));
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(-20, 20), e(0, 2);
  auto draw = [&] {
    std::vector<Term> terms;
    for (int i = 0; i < 3; ++i) {
      Monomial m{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)),
                 static_cast<std::uint32_t>(e(rng))};
      if (m.degree() >= 2) terms.push_back(Term{m, r->scalar(coef(rng))});
    }
    return Polynomial::fromTerms(r, terms);
  };
  const Polynomial x = poly(r, "x"), zero(r);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> I = {poly(r, "x^3") + draw(), poly(r, "y^3") + draw(), poly(r, "z^3") + draw()};
    std::vector<Polynomial> J = {poly(r, "x^2") + draw(), poly(r, "y^2"), poly(r, "z^2") + draw()};
    std::vector<FreeModuleVector> gens = {FreeModuleVector({x, poly(r, "1")})};
    std::vector<Polynomial> flat = I;
    for (const auto& p : I) gens.push_back(FreeModuleVector({p, zero}));
    for (const auto& p : J) {
      gens.push_back(FreeModuleVector({zero, p}));
      flat.push_back(x * p);
    }
    EXPECT_EQ(colength(standardBasis(r, 2, gens)), ExtendedNat(oracleValue(flat))) << trial;
  }
}

// Relations among the tangent fields of V(x^2+y^2+z^2, xy) modulo the
// trivial ones. Eliminating the unit relations leaves R / (2x^2+z^2,
// 2y^2+z^2, xy, xz, yz), of colength 5.
TEST(StandardBasis, RelationModuleWithUnitEntries) {
  auto r = ring({"x", "y", "z"});
  const std::vector<std::vector<const char*>> rows = {
      {"0", "0", "0", "-2", "2", "0", "0", "0"},
      {"0", "-2", "0", "0", "0", "0", "1", "0"},
      {"0", "0", "-2", "0", "0", "0", "0", "1"},
      {"0", "0", "0", "-1", "-1", "0", "0", "0"},
      {"y", "0", "1", "0", "0", "0", "0", "0"},
      {"x", "1", "0", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "-1", "0", "0"},
      {"-x^2-y^2-z^2", "-x", "-y", "-z", "0", "0", "x", "0"},
      {"0", "-y", "-x", "0", "0", "z", "0", "0"},
      {"0", "-z", "0", "0", "x", "-y", "0", "0"},
      {"-x^2-y^2-z^2", "-x", "-y", "0", "-z", "0", "0", "y"},
      {"0", "0", "-z", "y", "0", "-x", "0", "0"},
      {"0", "0", "-x*z", "0", "-x*y", "y^2+z^2", "0", "0"}};
  std::vector<FreeModuleVector> gens;
  for (const auto& row : rows) {
    std::vector<Polynomial> comps;
    for (const char* c : row) comps.push_back(poly(r, c));
    gens.push_back(FreeModuleVector(std::move(comps)));
  }
  EXPECT_EQ(oracleValue(ideal(r, "2*x^2+z^2, 2*y^2+z^2, x*y, x*z, y*z")), 5u);
  EXPECT_EQ(colength(standardBasis(r, 8, gens)), ExtendedNat(5));
  EXPECT_EQ(colength(standardBasis(r, 8, gens, Truncation::Off)), ExtendedNat(5));
}
