#include <gtest/gtest.h>

#include "pgc/error.hpp"
#include "pgc/poly_fit.hpp"

using namespace pgc;

namespace {

std::vector<std::pair<mpz_class, mpz_class>> sample(const QPolynomial& p, const std::vector<int>& xs) {
  std::vector<std::pair<mpz_class, mpz_class>> out;
  for (int x : xs) {
    mpq_class v = p(mpq_class(x));
    out.emplace_back(x, v.get_num());
  }
  return out;
}

TEST(PolyFit, RecoversIntegerPolynomials) {
  auto k = QPolynomial::from_ints({0, 0, 0, 0, -1, -1, 0, 1, 2});
  auto fit = poly_fit(sample(k, {7, 11, 13, 17, 19, 23, 29, 31, 37}), true);
  EXPECT_EQ(fit.poly, k);
  EXPECT_EQ(fit.poly.format("q"), "2*q^8 + q^7 - q^5 - q^4");
}

TEST(PolyFit, TaylorShiftExpandsAroundOne) {
  // q^2 - 1 = v^2 + 2v with v = q - 1.
  auto p = QPolynomial::from_ints({-1, 0, 1});
  EXPECT_EQ(taylor_shift(p, 1), QPolynomial::from_ints({0, 2, 1}));
  auto fit = poly_fit(sample(p, {2, 3, 5}));
  EXPECT_EQ(fit.shifted, QPolynomial::from_ints({0, 2, 1}));
}

TEST(PolyFit, ArithmeticAndSigns) {
  auto a = QPolynomial::from_ints({1, 1});
  auto b = QPolynomial::from_ints({-1, 1});
  EXPECT_EQ(a * b, QPolynomial::from_ints({-1, 0, 1}));
  EXPECT_EQ(a + b, QPolynomial::from_ints({0, 2}));
  EXPECT_EQ(a - a, QPolynomial());
  EXPECT_TRUE((a * b).has_negative_coefficient());
  EXPECT_FALSE(a.has_negative_coefficient());
}

TEST(PolyFit, Errors) {
  try {
    poly_fit({{1, 1}, {1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDuplicateNode);
  }
  try {
    poly_fit({{0, 0}, {2, 1}}, true);  // x / 2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNonIntegralCoefficient);
  }
}

}  // namespace
