#include <set>

#include <gtest/gtest.h>

#include "pgc/catalog.hpp"
#include "pgc/enumctr.hpp"
#include "pgc/error.hpp"

using namespace pgc;

namespace {

std::set<int> support(const CountVector& v) {
  std::set<int> out;
  for (const auto& [i, n] : v.entries) {
    if (n != 0) out.insert(i);
  }
  return out;
}

TEST(Catalog, TablesAreValidClassTwo) {
  std::vector<lie::Table> tables = {catalog::heisenberg_table(CoefficientRing::field(gf::make_field(5, 1))),
                                    catalog::boston_isaacs_table(2, 7), catalog::quadric_table(3),
                                    catalog::quadric_table(3, 2), catalog::isaacs_cd_table({1, 3}, 5),
                                    catalog::fm_table(2, 3, 5)};
  for (const auto& t : tables) {
    EXPECT_NO_THROW(lie::validate(t)) << t.name();
    EXPECT_EQ(lie::nilpotency_class(t), 2u) << t.name();
  }
}

TEST(Catalog, IsaacsDegreeSets) {
  for (std::uint32_t p : {3u, 5u}) {
    for (const auto& I : std::vector<std::set<int>>{{1}, {2}, {1, 2}, {1, 3}}) {
      auto t = catalog::isaacs_cd_table(I, p);
      EXPECT_EQ(t.dim(), 2 * static_cast<std::size_t>(*I.rbegin()) + I.size());
      auto v = enumctr::vectors_matrix(t);
      std::set<int> I0 = I;
      I0.insert(0);
      EXPECT_EQ(support(v.ch), I0);
    }
  }
}

TEST(Catalog, IsaacsRelationListVariantHasOtherRanks) {
  // All pairs at distance 1 and 3 among x_1..x_6: ranks {0, 4, 6}, so degree p never occurs.
  auto t = catalog::isaacs_cd_table({1, 3}, 5, catalog::IsaacsVariant::kRelationList);
  auto v = enumctr::vectors_matrix(t);
  EXPECT_EQ(support(v.ch), (std::set<int>{0, 2, 3}));
}

TEST(Catalog, FmClassSizesAndDegrees) {
  auto v = enumctr::vectors_matrix(catalog::fm_table(2, 3, 5));
  EXPECT_EQ(support(v.ch), (std::set<int>{0, 2}));
  EXPECT_EQ(support(v.cc), (std::set<int>{0, 1, 2, 3}));
  auto small = enumctr::vectors_matrix(catalog::fm_table(1, 1, 5));
  EXPECT_EQ(support(small.ch), (std::set<int>{0, 1}));
  EXPECT_EQ(support(small.cc), (std::set<int>{0, 1}));
}

TEST(Catalog, BostonIsaacsFormulasMatchEnumeration) {
  const std::uint32_t p = 5;
  for (std::int64_t alpha = 1; alpha < p; ++alpha) {
    auto t = catalog::boston_isaacs_table(alpha, p);
    auto pc = catalog::pfaffian_case_vectors(t);
    auto v = enumctr::vectors_matrix(t);
    EXPECT_EQ(pc.cc, v.cc) << alpha;
    EXPECT_EQ(pc.ch, v.ch) << alpha;
    EXPECT_EQ(pc.k, v.k);
    const mpz_class P = p;
    EXPECT_EQ(v.k, pow_mpz(p, 6) + pow_mpz(p, 3) - 1 + pc.n * (P * P - 1) * (P - 1));
  }
  try {
    catalog::boston_isaacs_table(5, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kZeroAlpha);
  }
}

TEST(Catalog, QuadricExampleAndRejection) {
  auto t = catalog::quadric_table(3);
  auto v = enumctr::vectors_matrix(t);
  auto e = catalog::quadric_expected(3);
  EXPECT_EQ(v.cc, e.cc);
  EXPECT_EQ(v.ch, e.ch);
  EXPECT_EQ(e.cc.at(0), 81);
  EXPECT_EQ(e.cc.at(2), 144);
  EXPECT_EQ(e.cc.at(3), 192);
  try {
    catalog::pfaffian_case_vectors(t);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::kHypothesesFailed);
    EXPECT_NE(std::string(err.what()).find("line"), std::string::npos);
  }
  auto t9 = catalog::quadric_table(3, 2);
  auto v9 = enumctr::vectors_matrix(t9);
  EXPECT_EQ(v9.cc, catalog::quadric_expected(3, 2).cc);
  EXPECT_EQ(v9.ch, catalog::quadric_expected(3, 2).ch);
}

TEST(Catalog, HeisenbergEntryExpectations) {
  auto entry = catalog::heisenberg_entry(CoefficientRing::field(gf::make_field(7, 1)));
  ASSERT_TRUE(entry.expected);
  auto v = enumctr::vectors_matrix(entry.table);
  EXPECT_EQ(v.cc, entry.expected->cc);
  EXPECT_EQ(v.ch, entry.expected->ch);
}

TEST(Catalog, PfaffianCaseRejectsSmallA) {
  auto t = catalog::heisenberg_table(CoefficientRing::field(gf::make_field(5, 1)));
  try {
    catalog::pfaffian_case_vectors(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kHypothesesFailed);
  }
}

}  // namespace
