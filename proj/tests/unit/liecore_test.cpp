#include <random>

#include <gtest/gtest.h>

#include "pgc/catalog.hpp"
#include "pgc/enumctr.hpp"
#include "pgc/error.hpp"
#include "pgc/freenil.hpp"
#include "pgc/liecore.hpp"

using namespace pgc;

namespace {

CoefficientRing gf(std::uint32_t p, std::uint32_t f = 1) { return CoefficientRing::field(gf::make_field(p, f)); }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kInvalidArgument;
}

TEST(Table, AntisymmetryIsImplied) {
  auto t = catalog::heisenberg_table(gf(5));
  EXPECT_EQ(t.bracket_terms(1, 0), (std::vector<lie::Term>{{2, 1}}));
  EXPECT_EQ(t.bracket_terms(0, 1), (std::vector<lie::Term>{{2, 4}}));
  EXPECT_TRUE(t.bracket_terms(0, 0).empty());
  EXPECT_EQ(t.bracket({1, 0, 0}, {0, 1, 0}), (lie::Vec{0, 0, 4}));
}

TEST(Table, BuilderRejectsConflicts) {
  lie::TableBuilder diag("x", gf(5), 3);
  diag.add(1, 1, 2, 1);
  EXPECT_EQ(code_of([&] { diag.build(); }), Errc::kAntisymmetryViolation);
  lie::TableBuilder clash("x", gf(5), 3);
  clash.add(0, 1, 2, 1).add(1, 0, 2, 1);
  EXPECT_EQ(code_of([&] { clash.build(); }), Errc::kAntisymmetryViolation);
  lie::TableBuilder fine("x", gf(5), 3);
  fine.add(0, 1, 2, 1).add(1, 0, 2, -1);
  EXPECT_NO_THROW(fine.build());
}

TEST(Table, JacobiAndNilpotencyChecks) {
  // so(3)-shaped: Jacobi holds, nilpotency fails.
  lie::Table t("bad", gf(5), 3);
  t.set_bracket(0, 1, {{2, 1}});
  t.set_bracket(1, 2, {{0, 1}});
  t.set_bracket(2, 0, {{1, 1}});
  EXPECT_NO_THROW(lie::check_jacobi(t));
  EXPECT_EQ(code_of([&] { lie::validate(t); }), Errc::kNotNilpotent);

  lie::Table j("jac", gf(5), 4);
  j.set_bracket(0, 1, {{2, 1}});
  j.set_bracket(0, 2, {{3, 1}});
  j.set_bracket(1, 2, {{3, 1}});
  j.set_bracket(0, 3, {{3, 1}});
  EXPECT_EQ(code_of([&] { lie::check_jacobi(j); }), Errc::kJacobiViolation);
}

TEST(Series, FreeTablesHaveWittLayers) {
  for (auto [r, c] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {2, 5}}) {
    auto t = freenil::free_table(r, c, gf(7));
    auto lcs = lie::lower_central_series(t);
    EXPECT_EQ(lcs.nilpotency_class, static_cast<std::size_t>(c));
    std::int64_t dim = 0;
    for (int i = c; i >= 1; --i) {
      dim += freenil::witt(r, i);
      EXPECT_EQ(lcs.terms[i - 1].log_order, dim) << r << "," << c << " term " << i;
    }
    EXPECT_EQ(lie::centre(t).size(), static_cast<std::size_t>(freenil::witt(r, c)));
    EXPECT_EQ(lie::derived(t).size(), t.dim() - r);
  }
}

TEST(Series, ModularHeisenbergCentre) {
  auto t = catalog::heisenberg_table(CoefficientRing::modular(3, 2));
  EXPECT_EQ(lie::centre(t).log_order, 2u);
  EXPECT_EQ(lie::derived(t).log_order, 2u);
  EXPECT_EQ(lie::nilpotency_class(t), 2u);
}

lie::Mat random_invertible(const gf::Field& F, std::size_t h, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, F.order() - 1);
  while (true) {
    lie::Mat m(h, h);
    for (auto& x : m.data) x = d(rng);
    if (linalg::rank(F, m) == h) return m;
  }
}

TEST(AdaptedBasis, RandomBasisChangesAreReadapted) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto base = trial % 2 ? freenil::free_table(2, 3, gf(5)) : catalog::boston_isaacs_table(2, 5);
    const auto& F = base.ring().field();
    auto m = random_invertible(F, base.dim(), rng);
    auto shuffled = lie::change_basis(base, m);
    lie::validate(shuffled);
    auto ab = lie::adapt_basis(shuffled);
    EXPECT_TRUE(lie::is_adapted(ab.table, ab.a, ab.b));
    EXPECT_EQ(enumctr::vectors_matrix(shuffled).cc, enumctr::vectors_matrix(base).cc);
  }
}

TEST(AdaptedBasis, ChangeBasisTransportsBrackets) {
  std::mt19937_64 rng(5);
  auto base = freenil::free_table(2, 4, gf(7));
  const auto& F = base.ring().field();
  const auto& R = base.ring();
  auto m = random_invertible(F, base.dim(), rng);
  auto t = lie::change_basis(base, m);
  // New basis vector i is row i of m; [n_i, n_j] in old coordinates equals
  // sum_k c_k n_k.
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      auto lhs = base.bracket(m.row(i), m.row(j));
      lie::Vec rhs(base.dim(), 0);
      for (const auto& term : t.bracket_terms(i, j)) {
        for (std::size_t r = 0; r < base.dim(); ++r) rhs[r] = R.add(rhs[r], R.mul(term.c, m(term.k, r)));
      }
      ASSERT_EQ(lhs, rhs);
    }
  }
}

TEST(AdaptedBasis, ModularRingsAreRejected) {
  auto t = catalog::heisenberg_table(CoefficientRing::modular(3, 2));
  EXPECT_EQ(code_of([&] { lie::adapt_basis(t); }), Errc::kUnsupportedRing);
}

TEST(BaseChange, HeisenbergOverExtension) {
  auto t = lie::base_change(catalog::heisenberg_table(gf(3)), 2);
  EXPECT_EQ(t.ring().order(), 9u);
  auto v = enumctr::vectors_matrix(t);
  EXPECT_EQ(v.k, 9 * 9 + 9 - 1);
}

}  // namespace
