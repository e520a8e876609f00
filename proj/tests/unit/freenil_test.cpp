#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgc/commat.hpp"
#include "pgc/enumctr.hpp"
#include "pgc/error.hpp"
#include "pgc/freenil.hpp"

using namespace pgc;
using namespace pgc::freenil;

namespace {

CoefficientRing gf(std::uint32_t p, std::uint32_t f = 1) { return CoefficientRing::field(gf::make_field(p, f)); }

// Necklace count by brute force: primitive words of length i up to rotation.
std::int64_t necklaces(int r, int i) {
  std::int64_t total = 1;
  for (int k = 0; k < i; ++k) total *= r;
  std::int64_t primitive = 0;
  for (std::int64_t w = 0; w < total; ++w) {
    std::vector<int> word(i);
    std::int64_t t = w;
    for (int k = 0; k < i; ++k) {
      word[k] = static_cast<int>(t % r);
      t /= r;
    }
    bool is_primitive = true;
    for (int s = 1; s < i && is_primitive; ++s) {
      std::vector<int> rot(i);
      std::rotate_copy(word.begin(), word.begin() + s, word.end(), rot.begin());
      if (rot == word) is_primitive = false;
    }
    if (is_primitive) ++primitive;
  }
  return primitive / i;
}

TEST(Witt, ValuesAndNecklaceOracle) {
  EXPECT_EQ(witt(2, 1), 2);
  EXPECT_EQ(witt(2, 2), 1);
  EXPECT_EQ(witt(2, 3), 2);
  EXPECT_EQ(witt(3, 3), 8);
  EXPECT_EQ(witt(2, 5), 6);
  for (int r = 2; r <= 4; ++r) {
    for (int i = 1; i <= 6; ++i) EXPECT_EQ(witt(r, i), necklaces(r, i)) << r << "," << i;
  }
}

TEST(Bounds, Exponents) {
  EXPECT_EQ(n_bound(2, 4), 2);
  EXPECT_EQ(n_bound(3, 3), 3);
  EXPECT_EQ(n_bound(2, 5), 3);
  EXPECT_EQ(k_exponent(3, 3, 3), 0);
  EXPECT_EQ(k_exponent(2, 3, 1), 2);
  EXPECT_EQ(k_exponent(2, 3, 2), 2);
  // N = sum W - 2n from the definition.
  EXPECT_EQ(N_exponent(2, 3), 1);
  EXPECT_EQ(N_exponent(2, 4), 8 - 4);
}

TEST(Bounds, TopCharacterEntryOfF23GrowsLikeQCubed) {
  for (std::uint32_t q : {5u, 7u, 11u}) {
    auto fx = fixture_vectors(2, 3, q, 1);
    mpq_class ratio(fx.ch.at(1), pow_mpz(q, 3));
    mpq_class dev = ratio - 1;
    if (dev < 0) dev = -dev;
    EXPECT_LE(dev, mpq_class(1, q));
  }
}

TEST(HallBasis, LayerSizesAreWitt) {
  for (int r = 2; r <= 4; ++r) {
    for (int c = 1; c <= 5; ++c) {
      HallBasis hb(r, c);
      for (int i = 1; i <= c; ++i) EXPECT_EQ(static_cast<std::int64_t>(hb.layers()[i - 1].size()), witt(r, i));
    }
  }
}

TEST(HallBasis, TwoGeneratorLayersMatchTheTable) {
  HallBasis hb(2, 5);
  auto names = [&](int w) {
    std::vector<std::string> out;
    for (auto i : hb.layers()[w - 1]) out.push_back(hb[i].display);
    return out;
  };
  EXPECT_EQ(names(1), (std::vector<std::string>{"y", "x"}));
  EXPECT_EQ(names(2), (std::vector<std::string>{"xy"}));
  EXPECT_EQ(names(3), (std::vector<std::string>{"xyy", "xyx"}));
  EXPECT_EQ(names(4), (std::vector<std::string>{"xyyy", "xyyx", "xyxx"}));
  // The weight-5 layer is compared as a set: the tie-break orders it by parents.
  auto w5 = names(5);
  EXPECT_EQ(std::set<std::string>(w5.begin(), w5.end()),
            (std::set<std::string>{"xyyyx", "xyyxx", "xyxxx", "xyyyy", "(xyx)(xy)", "(xyy)(xy)"}));
}

TEST(HallBasis, HallConditionHolds) {
  HallBasis hb(3, 4);
  for (const auto& b : hb.elements()) {
    if (!b.parents) continue;
    auto [u, v] = *b.parents;
    EXPECT_GT(u, v);
    if (hb[u].parents) EXPECT_LE(hb[u].parents->second, v);
    EXPECT_EQ(hb[u].weight + hb[v].weight, b.weight);
  }
}

TEST(Collector, SmallBrackets) {
  HallBasis hb(2, 3);
  Collector col(hb);
  const auto y = 0, x = 1;
  const auto xy = *hb.find("xy");
  EXPECT_EQ(col.collect(x, y), (Combination{{xy, 1}}));
  EXPECT_EQ(col.collect(y, x), (Combination{{xy, -1}}));
  EXPECT_EQ(col.collect(xy, x), (Combination{{*hb.find("xyx"), 1}}));
  EXPECT_EQ(col.collect(x, xy), (Combination{{*hb.find("xyx"), -1}}));
  EXPECT_TRUE(col.collect(x, x).empty());
}

// The collected structure constants satisfy Jacobi over Z, checked by bracketing
// Hall elements with integer combinations.
TEST(Collector, JacobiOverTheIntegers) {
  HallBasis hb(3, 4);
  Collector col(hb);
  const std::size_t n = hb.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (hb[a].weight + hb[b].weight + hb[c].weight > 4) continue;
        Combination A{{a, 1}}, B{{b, 1}}, C{{c, 1}};
        std::map<std::size_t, std::int64_t> sum;
        for (const auto& comb : {col.bracket(A, col.bracket(B, C)), col.bracket(B, col.bracket(C, A)),
                                 col.bracket(C, col.bracket(A, B))}) {
          for (const auto& [k, v] : comb) sum[k] += v;
        }
        for (const auto& [k, v] : sum) ASSERT_EQ(v, 0) << a << " " << b << " " << c;
      }
    }
  }
}

TEST(FreeTable, NamesAndGuards) {
  EXPECT_EQ(free_table_name(2, 3), "free-r2-c3");
  EXPECT_EQ(free_table(2, 3, gf(5)).name(), "free-r2-c3");
  try {
    free_table(2, 3, gf(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kClassTooLarge);
  }
  EXPECT_NO_THROW(lie::validate(free_table_unchecked(2, 3, gf(3))));
  for (int r = 2; r <= 4; ++r) {
    for (int c = 1; c <= 5; ++c) {
      if (r == 4 && c == 5) continue;  // dimension 4+6+20+60+204
      EXPECT_NO_THROW(lie::validate(free_table(r, c, gf(7)))) << r << "," << c;
    }
  }
}

TEST(FreeTable, F22IsHeisenberg) {
  auto t = free_table(2, 2, gf(5));
  ASSERT_EQ(t.dim(), 3u);
  EXPECT_EQ(t.bracket_terms(1, 0), (std::vector<lie::Term>{{2, 1}}));
}

TEST(FreeTable, BBlocksVanishAboveTheClass) {
  // In Hall order the X variables are layers 1..c-1, the Y variables layers 2..c;
  // [layer i, layer j] lands in layer i + j, so blocks with i + j > c are zero.
  for (auto [r, c] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {2, 5}}) {
    auto t = free_table(r, c, gf(7));
    HallBasis hb(r, c);
    for (std::size_t i = 0; i < t.dim(); ++i) {
      for (std::size_t j = 0; j < t.dim(); ++j) {
        if (hb[i].weight + hb[j].weight > c) {
          ASSERT_TRUE(t.bracket_terms(i, j).empty());
        } else {
          for (const auto& term : t.bracket_terms(i, j)) ASSERT_EQ(hb[term.k].weight, hb[i].weight + hb[j].weight);
        }
      }
    }
  }
}

TEST(FreeTable, CentralBlockHasNoRepeatedVariables) {
  // c = 2m: the (m, m) block of B lists each layer-2m variable at most once above the diagonal.
  auto t = free_table(2, 4, gf(7));
  HallBasis hb(2, 4);
  std::map<std::uint32_t, int> seen;
  for (auto i : hb.layers()[1]) {
    for (auto j : hb.layers()[1]) {
      if (i >= j) continue;
      for (const auto& term : t.bracket_terms(i, j)) ++seen[term.k];
    }
  }
  for (const auto& [k, count] : seen) EXPECT_LE(count, 1);
}

TEST(ClosedForms, ClassVectorExamples) {
  const std::uint32_t q = 5;
  auto heis = class_vector_closed(2, 2, q, 1);
  EXPECT_EQ(heis.at(0), 5);
  EXPECT_EQ(heis.at(1), 24);
  auto f23 = class_vector_closed(2, 3, q, 1);
  EXPECT_EQ(f23.at(0), 25);
  EXPECT_EQ(f23.at(2), 124);
  const std::uint32_t p = 7;
  auto f33 = class_vector_closed(3, 3, p, 1);
  const mpz_class Q = 7;
  EXPECT_EQ(f33.at(0), pow_mpz(7, 8));
  EXPECT_EQ(f33.at(3), (Q * Q * Q - 1) * pow_mpz(7, 5));
  EXPECT_EQ(f33.at(5), (Q * Q * Q - 1) * pow_mpz(7, 6));
  // f > 1 scales exponents by f.
  auto ext = class_vector_closed(2, 3, 5, 2);
  EXPECT_EQ(ext.at(4), pow_mpz(25, 3) - 1);
}

TEST(ClosedForms, ClassVectorMatchesEnumeration) {
  for (auto [r, c, p] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {3, 2, 3}, {2, 3, 5}, {2, 3, 7}, {2, 4, 5}, {4, 2, 3}}) {
    auto t = free_table(r, c, gf(p));
    auto v = enumctr::vectors_matrix(t);
    EXPECT_EQ(v.cc, class_vector_closed(r, c, p, 1)) << r << "," << c << "," << p;
    if (c == 2) EXPECT_EQ(v.ch, char_vector_class2(r, p, 1));
  }
}

TEST(ClosedForms, CharacterData) {
  EXPECT_EQ(char_degrees_closed(3, 3), (std::set<int>{0, 1, 2, 3}));
  try {
    char_degrees_closed(2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kExceptionalCase);
  }
  auto c2 = char_vector_class2(2, 5, 1);
  EXPECT_EQ(c2.at(0), 25);
  EXPECT_EQ(c2.at(1), 4);
  for (std::uint32_t q : {5u, 7u, 11u}) {
    const mpz_class Q = q;
    EXPECT_EQ(char_count_degree_q(2, 4, q, 1), Q * Q * Q * Q + Q * Q * Q - Q * Q - 1);
  }
}

TEST(ClosedForms, CarlitzHodgesMatchesSkewCensus) {
  for (int r = 2; r <= 4; ++r) {
    for (auto [p, f] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {2, 2}}) {
      oracle::PolyField F(gf::make_field(p, f));
      auto census = oracle::skew_rank_census(F, r);
      auto nu = nu_class2(r, p, f);
      for (const auto& [i, n] : census) EXPECT_EQ(nu.at(i), n) << r << " " << p << "^" << f << " i=" << i;
      EXPECT_EQ(nu.total(), pow_mpz(F.order(), r * (r - 1) / 2));
    }
  }
}

TEST(ClosedForms, DegreeQCountMatchesEnumeration) {
  for (auto [r, c, p] : std::vector<std::tuple<int, int, int>>{{2, 3, 5}, {2, 4, 5}, {2, 3, 7}}) {
    auto v = enumctr::vectors_matrix(free_table(r, c, gf(p)));
    EXPECT_EQ(v.ch.at(1), char_count_degree_q(r, c, p, 1)) << r << "," << c << "," << p;
  }
}

TEST(Fixtures, PolynomialsAndSums) {
  for (auto [r, c] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}, {2, 5}}) {
    auto polys = fixture_char_polynomials(r, c);
    for (std::uint32_t q : {7u, 11u, 13u}) {
      auto fx = fixture_vectors(r, c, q, 1);
      EXPECT_EQ(fx.cc, class_vector_closed(r, c, q, 1));
      EXPECT_EQ(fx.cc.total(), fx.ch.total()) << r << "," << c << " q=" << q;
      mpz_class weighted = 0;
      for (const auto& [i, n] : fx.ch.entries) weighted += n * pow_mpz(q, 2 * i);
      EXPECT_EQ(weighted, fx.cc.weighted(1));
    }
  }
  try {
    fixture_char_polynomials(4, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownFixture);
  }
}

TEST(Fixtures, F25DegreeQCubedEntryInQMinusOne) {
  auto polys = fixture_char_polynomials(2, 5);
  // q^2 (q^2 - 1)(q^4 - q - 1)
  auto expect = QPolynomial::from_ints({0, 0, 1}) * QPolynomial::from_ints({-1, 0, 1}) *
                QPolynomial::from_ints({-1, -1, 0, 0, 1});
  EXPECT_EQ(polys.at(3), expect);
  auto shifted = taylor_shift(polys.at(3), 1);
  EXPECT_TRUE(shifted.has_negative_coefficient());
}

}  // namespace
