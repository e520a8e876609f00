#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_outcome(const props::Outcome& o, int min_cases) {
  EXPECT_TRUE(o.ok()) << o.failure;
  EXPECT_GE(o.cases, min_cases);
}

TEST(Properties, BilinearIdentityAndEvenRanks) { expect_outcome(props::bilinear_identity_and_even_ranks(), props::kCases); }
TEST(Properties, PfaffianSquaredIsDeterminant) { expect_outcome(props::pfaffian_squared_is_determinant(), props::kCases); }
TEST(Properties, CountingInvariantsOnRandomClassTwoTables) {
  expect_outcome(props::counting_invariants_class2(), props::kCases);
}
TEST(Properties, CountingInvariantsOnHigherClass) { expect_outcome(props::counting_invariants_higher_class(), 15); }
TEST(Properties, BchDenominatorPrimesAreAtMostDegree) { expect_outcome(props::bch_denominators(), 1); }
TEST(Properties, BchMatchesMatrixOracle) { expect_outcome(props::bch_matrix_oracle(), props::kCases); }

// Other seeds give independent samples of the same invariants.
TEST(Properties, SecondSeed) {
  expect_outcome(props::bilinear_identity_and_even_ranks(7), props::kCases);
  expect_outcome(props::pfaffian_squared_is_determinant(8), props::kCases);
  expect_outcome(props::bch_matrix_oracle(9), props::kCases);
}

}  // namespace
