#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgc/catalog.hpp"
#include "pgc/enumctr.hpp"
#include "pgc/error.hpp"
#include "pgc/freenil.hpp"

using namespace pgc;

namespace {

CoefficientRing gf(std::uint32_t p, std::uint32_t f = 1) { return CoefficientRing::field(gf::make_field(p, f)); }

TEST(Vectors, HeisenbergOverSeveralFields) {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    auto t = catalog::heisenberg_table(gf(p, f));
    auto v = enumctr::vectors_matrix(t);
    const mpz_class q = pow_mpz(p, f);
    CountVector cc(p), ch(p);
    cc.add(0, q);
    cc.add(f, q * q - 1);
    ch.add(0, q * q);
    ch.add(f, q - 1);
    EXPECT_EQ(v.cc, cc);
    EXPECT_EQ(v.ch, ch);
    EXPECT_EQ(v.k, q * q + q - 1);
    EXPECT_EQ(v.s_size, v.s_size_dual);
  }
}

TEST(Vectors, DualPathAgreesOnFields) {
  std::vector<lie::Table> tables = {catalog::heisenberg_table(gf(3, 2)), freenil::free_table(2, 3, gf(5)),
                                    freenil::free_table(3, 2, gf(3)), catalog::quadric_table(3),
                                    catalog::fm_table(1, 2, 3)};
  for (const auto& t : tables) {
    auto a = enumctr::vectors_matrix(t);
    auto b = enumctr::vectors_dual(t);
    EXPECT_EQ(a.cc, b.cc) << t.name();
    EXPECT_EQ(a.ch, b.ch) << t.name();
    EXPECT_EQ(a.s_size, b.s_size) << t.name();
    EXPECT_EQ(b.s_size, b.s_size_dual) << t.name();
  }
}

TEST(Vectors, ClassNumberMatchesCommutingPairs) {
  std::vector<lie::Table> tables = {catalog::heisenberg_table(gf(3)), catalog::heisenberg_table(CoefficientRing::modular(3, 2)),
                                    freenil::free_table(2, 3, gf(5)), catalog::fm_table(1, 2, 3)};
  for (const auto& t : tables) {
    EXPECT_EQ(enumctr::class_number(t).k, oracle::commuting_pairs_class_number(t)) << t.name();
  }
}

TEST(Vectors, ThreadCountDoesNotChangeResults) {
  auto t = catalog::boston_isaacs_table(3, 5);
  EnumOptions one, four;
  four.threads = 4;
  auto a = enumctr::vectors_matrix(t, one);
  auto b = enumctr::vectors_matrix(t, four);
  EXPECT_EQ(a.cc, b.cc);
  EXPECT_EQ(a.ch, b.ch);
  auto d1 = enumctr::vectors_dual(freenil::free_table(2, 3, gf(5)), one);
  auto d4 = enumctr::vectors_dual(freenil::free_table(2, 3, gf(5)), four);
  EXPECT_EQ(d1.cc, d4.cc);
  EXPECT_EQ(d1.ch, d4.ch);
}

TEST(Vectors, ModularRingsUseTheDualPath) {
  auto t = catalog::heisenberg_table(CoefficientRing::modular(5, 2));
  auto v = enumctr::compute_vectors(t, enumctr::Method::kAuto);
  EXPECT_EQ(v.method, "dual");
  EXPECT_EQ(v.cc.weighted(1), pow_mpz(5, 6));
  EXPECT_EQ(v.ch.weighted(2), pow_mpz(5, 6));
  try {
    enumctr::compute_vectors(t, enumctr::Method::kMatrix);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnsupportedRing);
  }
}

TEST(Vectors, Guards) {
  auto big = freenil::free_table_unchecked(2, 3, gf(3));
  try {
    enumctr::vectors_matrix(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kClassTooLarge);
  }
  EnumOptions tiny;
  tiny.budget = 100;
  try {
    enumctr::vectors_matrix(freenil::free_table(2, 3, gf(5)), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBudgetExceeded);
  }
}

TEST(RankDistribution, SumsAndEvenRanks) {
  auto t = freenil::free_table(3, 2, gf(5));
  auto m = commat::commutator_matrices(t);
  const auto& F = t.ring().field();
  auto mu = enumctr::rank_distribution_A(F, m.A);
  auto nu = enumctr::rank_distribution_B(F, m.B);
  EXPECT_EQ(mu.total(), pow_mpz(5, m.A.nvars));
  EXPECT_EQ(nu.total(), pow_mpz(5, m.B.nvars));
  EXPECT_EQ(nu, freenil::nu_class2(3, 5, 1));
}

}  // namespace
