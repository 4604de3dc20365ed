#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "commands.hpp"
#include "germcalc/errors.hpp"
#include "germcalc/parser.hpp"
#include "germfile.hpp"

using namespace germcalc;
using namespace germcalc::app;

namespace {

const char* kWorked = "# four lines\nring Q x, y, z\nX: x^2+y^2+z^2, x*y\nf: z^2+x*y   # quadric\n";

void expectError(const std::string& text, std::size_t line, std::size_t column, const std::string& fragment) {
  try {
    parseGermfile(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const GermfileError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Germfile, ParsesDirectivesAndComments) {
  const Germfile g = parseGermfile(kWorked);
  EXPECT_EQ(g.ring->names(), (std::vector<std::string>{"x", "y", "z"}));
  ASSERT_EQ(g.phi.size(), 2u);
  EXPECT_EQ(g.phi[1].toString(), "x*y");
  ASSERT_TRUE(g.f);
  EXPECT_EQ(g.f->toString(), "x*y+z^2");
  EXPECT_FALSE(g.seed);

  const Germfile h = parseGermfile("ring Fp:7 a b\nseed: 12\nX:\n");
  EXPECT_TRUE(h.phi.empty());
  EXPECT_EQ(h.seed, 12u);
  EXPECT_EQ(h.ring->field().toString(), "Fp:7");
}

TEST(Germfile, ErrorsCarryPositions) {
  expectError("ring Q x y\nX: x^2+*y\n", 2, 8, "unexpected");
  expectError("X: x\n", 1, 1, "before the ring");
  expectError("ring Q x\nX: x\nX: x^2\n", 3, 1, "second X");
  expectError("ring Q x\nX: x\ng: x\n", 3, 1, "unknown directive");
  expectError("ring Q x\n", 0, 0, "missing 'X:'");
  expectError("ring Fp:8 x\nX: x\n", 1, 6, "");
  expectError("ring Q x\nX: x\nseed: -1\n", 3, 7, "nonnegative");
  expectError("ring Q x\nX: x\nf: q\n", 3, 4, "");
}

TEST(Report, ExactNumbersAndInfinity) {
  EXPECT_EQ(exactNumber(ExtendedNat(5)), 5);
  EXPECT_EQ(exactNumber(ExtendedNat::infinite()), "infinite");
  EXPECT_EQ(exactNumber(ExtendedNat((1ULL << 53) + 1)), "9007199254740993");
  EXPECT_EQ(exactNumber(std::optional<std::int64_t>(-3)), -3);
  EXPECT_EQ(exactNumber(std::optional<std::int64_t>()), "infinite");
}

TEST(Report, ComputeIsDeterministicAndRejectsNonICIS) {
  const Germfile g = parseGermfile(kWorked);
  Outcome a = computeCommand(g, {}, Method::Both, 1);
  Outcome b = computeCommand(g, {}, Method::Both, 1);
  EXPECT_EQ(a.exit, kOk);
  a.doc.erase("timing");
  b.doc.erase("timing");
  EXPECT_EQ(a.doc.dump(), b.doc.dump());
  EXPECT_EQ(a.doc["invariants"]["brMinusFormula"]["value"], 7);
  EXPECT_EQ(a.doc["invariants"]["brCor412"]["value"], 9);

  const Outcome bad = computeCommand(parseGermfile("ring Q x y z\nX: x*y, x*z\n"), {}, Method::Both, 1);
  EXPECT_EQ(bad.exit, kInputError);
  EXPECT_NE(bad.text.find("not an ICIS"), std::string::npos);
  EXPECT_EQ(bad.doc["icis"]["valid"], false);
}

TEST(Report, VerifySkipsInapplicableIdentities) {
  const Outcome o = verifyCommand(parseGermfile(kWorked), {"t22", "t46", "c412", "c49"}, 1);
  EXPECT_EQ(o.exit, kOk);
  const auto& items = o.doc["identities"];
  ASSERT_EQ(items.size(), 4u);
  EXPECT_EQ(items[0]["verdict"], "PASS");
  EXPECT_EQ(items[3]["verdict"], "SKIPPED");
}

TEST(Report, ErrorMapping) {
  EXPECT_EQ(errorOutcome("compute", DegreeCapExceeded(40)).exit, kResourceCap);
  EXPECT_EQ(errorOutcome("compute", InternalError("bug")).exit, kFailure);
  EXPECT_EQ(errorOutcome("compute", std::invalid_argument("bad")).exit, kInputError);
  EXPECT_EQ(errorOutcome("compute", std::runtime_error("io")).exit, kInputError);
}

TEST(Report, LcRoundTripsThroughTheParser) {
  const std::string path = ::testing::TempDir() + "lc_roundtrip.json";
  const Outcome o = lcCommand(parseGermfile(kWorked), path, 1);
  ASSERT_EQ(o.exit, kOk);
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  std::vector<std::string> names = doc["variables"];
  const RingPtr r = GermRing::create(names, Field::rationals());
  for (const char* key : {"lc", "lcMinus", "lcT"})
    for (const std::string s : doc[key]) EXPECT_EQ(parsePolynomial(s, r).toString(), s) << key;
  std::vector<std::string> lcT = doc["lcT"];
  EXPECT_NE(std::find(lcT.begin(), lcT.end(), "x^2+y^2+z^2"), lcT.end());
  EXPECT_NE(std::find(lcT.begin(), lcT.end(), "x*y"), lcT.end());
  std::remove(path.c_str());
}
