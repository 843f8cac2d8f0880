#include <gtest/gtest.h>

#include "ucg/verify.hpp"

using namespace ucg;
using namespace ucg::verify;

namespace {

void expect_pass(const std::string& suite, const std::vector<std::string>& fields) {
  const SuiteReport r = run_suite(suite, fields, 3);
  EXPECT_FALSE(r.properties.empty()) << suite;
  for (const auto& p : r.properties) {
    EXPECT_TRUE(p.passed()) << suite << ": " << p.name << " " << p.counterexample;
    EXPECT_GT(p.checked, 0u) << suite << ": " << p.name;
  }
}

}  // namespace

TEST(Verify, Polarization) { expect_pass("polarization", {"fp:3", "f2", "rational"}); }
TEST(Verify, GenOrthoBasis) { expect_pass("gen-ortho-basis", {"fp:3", "f2"}); }
TEST(Verify, WittOracle) { expect_pass("witt-oracle", {"fp:3"}); }
TEST(Verify, OrbitAtlas) { expect_pass("orbit-atlas", {"fp:3"}); }
TEST(Verify, IncidenceTheorems) { expect_pass("incidence-theorems", {"fp:3"}); }
TEST(Verify, ProjectionIdentity) { expect_pass("projection-identity", {"fp:3"}); }
TEST(Verify, GammaOrders) { expect_pass("gamma-orders", {"fp:3", "fp:5"}); }
TEST(Verify, DistanceAdditivity) { expect_pass("distance-additivity", {"fp:3"}); }
TEST(Verify, CycleEquivalence) { expect_pass("cycle-equivalence", {"rational", "fp:3"}); }
TEST(Verify, Separations) { expect_pass("separations", {}); }
TEST(Verify, CharTwoLemmas) { expect_pass("char2-lemmas", {"f2"}); }

TEST(Verify, UnknownSuite) {
  try {
    run_suite("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(Verify, NamesAndReportShape) {
  EXPECT_EQ(suite_names().size(), 11u);
  const SuiteReport r = run_suite("polarization", {"fp:3"});
  const auto j = to_json(r);
  EXPECT_EQ(j.at("suite"), "polarization");
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_NE(to_text(r).find("polarization"), std::string::npos);
}
