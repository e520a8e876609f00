#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgc/error.hpp"
#include "pgc/field.hpp"

using pgc::gf::Field;
using pgc::gf::make_field;

namespace {

class FieldVsSchoolbook : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldVsSchoolbook, MultiplicationAndAdditionAgree) {
  const auto [p, f] = GetParam();
  Field F(make_field(p, f));
  oracle::PolyField ref(F.spec());
  const auto q = F.order();
  for (pgc::gf::Elem a = 0; a < q; ++a) {
    for (pgc::gf::Elem b = 0; b < q; ++b) {
      ASSERT_EQ(F.mul(a, b), ref.mul(a, b)) << a << "*" << b;
      ASSERT_EQ(F.add(a, b), ref.add(a, b)) << a << "+" << b;
    }
    ASSERT_EQ(F.neg(a), ref.neg(a));
    if (a != 0) ASSERT_EQ(F.mul(a, F.inv(a)), 1u);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldVsSchoolbook,
                         ::testing::Values(std::pair{2, 1}, std::pair{5, 1}, std::pair{2, 3}, std::pair{2, 4},
                                           std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 2}, std::pair{7, 2},
                                           std::pair{3, 4}));

TEST(Field, ModulusIsIrreducibleAndLexLeast) {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}, {7, 2}}) {
    auto spec = make_field(p, f);
    std::vector<std::uint32_t> monic = spec.modulus;
    monic.push_back(1);
    EXPECT_TRUE(pgc::gf::is_irreducible(monic, p));
    // For f <= 3 irreducible means no root; every lex-smaller monic has one.
    auto has_root = [&](const std::vector<std::uint32_t>& m) {
      for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(p); ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = m.size(); i-- > 0;) v = (v * x + m[i]) % p;
        if (v == 0) return true;
      }
      return false;
    };
    std::uint64_t index = 0;
    for (std::size_t i = spec.modulus.size(); i-- > 0;) index = index * p + spec.modulus[i];
    for (std::uint64_t n = 0; n < index; ++n) {
      std::vector<std::uint32_t> m(f + 1, 1);
      std::uint64_t t = n;
      for (int i = 0; i < f; ++i) {
        m[i] = t % p;
        t /= p;
      }
      EXPECT_TRUE(has_root(m)) << "smaller irreducible modulus exists for " << p << "^" << f;
    }
  }
}

TEST(Field, ElementsAreEnumeratedInIndexOrder) {
  Field F(make_field(3, 2));
  auto els = F.elements();
  ASSERT_EQ(els.size(), 9u);
  for (std::size_t i = 0; i < els.size(); ++i) EXPECT_EQ(els[i], i);
  EXPECT_EQ(F.to_element(5).coords, (std::vector<std::uint32_t>{2, 1}));
  EXPECT_EQ(F.from_element({{2, 1}}), 5u);
  EXPECT_EQ(F.format(5), "(2,1)");
}

TEST(Field, MultiplicativeGroupIsCyclicOfOrderQMinusOne) {
  Field F(make_field(5, 2));
  std::size_t max_order = 0;
  for (pgc::gf::Elem a = 1; a < F.order(); ++a) {
    std::size_t k = 1;
    for (auto x = a; x != 1; x = F.mul(x, a)) ++k;
    max_order = std::max(max_order, k);
    EXPECT_EQ(F.pow(a, F.order() - 1), 1u);
  }
  EXPECT_EQ(max_order, 24u);
}

TEST(Field, FromIntReducesNegatives) {
  Field F(make_field(7, 1));
  EXPECT_EQ(F.from_int(-1), 6u);
  EXPECT_EQ(F.from_int(15), 1u);
  Field G(make_field(3, 2));
  EXPECT_EQ(G.from_int(-1), 2u);
}

TEST(Field, Errors) {
  EXPECT_THROW(make_field(6, 1), pgc::Error);
  try {
    make_field(9, 1);
    FAIL();
  } catch (const pgc::Error& e) {
    EXPECT_EQ(e.code(), pgc::Errc::kNotPrime);
  }
  Field F(make_field(5, 1));
  try {
    F.inv(0);
    FAIL();
  } catch (const pgc::Error& e) {
    EXPECT_EQ(e.code(), pgc::Errc::kDivisionByZero);
  }
}

}  // namespace
