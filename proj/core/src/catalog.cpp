#include "pgc/catalog.hpp"

#include <fmt/format.h>

#include "pgc/error.hpp"

namespace pgc::catalog {
namespace {

CoefficientRing prime_field(std::uint32_t p) { return CoefficientRing::field(gf::make_field(p, 1)); }

std::string set_string(const std::set<int>& s) {
  std::string out;
  for (int i : s) out += (out.empty() ? "" : ",") + std::to_string(i);
  return out;
}

}  // namespace

lie::Table heisenberg_table(const CoefficientRing& ring) {
  lie::Table t("heisenberg", ring, 3);
  t.set_bracket(1, 0, {{2, 1}});
  return t;
}

lie::Table isaacs_cd_table(const std::set<int>& I, std::uint32_t p, IsaacsVariant variant) {
  if (I.empty() || *I.begin() < 1) throw Error(Errc::kInvalidArgument, "I must be a nonempty set of positive integers");
  if (p == 2) throw Error(Errc::kInvalidArgument, "p must be odd");
  const int j = *I.rbegin();
  const std::size_t h = 2 * j + I.size();
  lie::TableBuilder builder(fmt::format("isaacs-cd-I{}", set_string(I)), prime_field(p), h);
  std::size_t y = 2 * j;
  for (int i : I) {
    if (variant == IsaacsVariant::kBlock) {
      for (int r = 0; r < i; ++r) builder.add(r, r + i, y, 1);
    } else {
      for (int r = 0; r + i < 2 * j; ++r) builder.add(r, r + i, y, 1);
    }
    ++y;
  }
  return builder.build();
}

lie::Table fm_table(int l, int n, std::uint32_t p) {
  if (l < 1 || n < 1) throw Error(Errc::kInvalidArgument, "l and n must be positive");
  if (p == 2) throw Error(Errc::kInvalidArgument, "p must be odd");
  const std::size_t tilde0 = l;
  const std::size_t y0 = tilde0 + l + n - 1;
  lie::TableBuilder builder(fmt::format("fm-l{}-n{}", l, n), prime_field(p), y0 + n);
  for (int i = 1; i <= l; ++i) {
    for (int jj = i; jj <= i + n - 1; ++jj) builder.add(i - 1, tilde0 + jj - 1, y0 + (jj - i), 1);
  }
  return builder.build();
}

lie::Table boston_isaacs_table(std::int64_t alpha, std::uint32_t p) {
  const CoefficientRing ring = prime_field(p);
  lie::TableBuilder builder(fmt::format("boston-isaacs-a{}", alpha), ring, 9);
  if (builder.ring().from_int(alpha) == 0) throw Error(Errc::kZeroAlpha, "alpha must be nonzero mod p");
  enum { e1, e2, e3, e4, e5, e6, f1, f2, f3 };
  builder.add(e1, e4, f1, 1)
      .add(e1, e5, f2, 1)
      .add(e1, e6, f3, alpha)
      .add(e2, e4, f3, 1)
      .add(e2, e5, f1, 1)
      .add(e2, e6, f2, 1)
      .add(e3, e4, f3, 1)
      .add(e3, e6, f1, 1);
  return builder.build();
}

lie::Table quadric_table(std::uint32_t p, std::uint32_t f) {
  lie::TableBuilder builder("quadric", CoefficientRing::field(gf::make_field(p, f)), 8);
  enum { e1, e2, e3, e4, f1, f2, f3, f4 };
  builder.add(e1, e3, f1, 1).add(e1, e4, f2, 1).add(e2, e3, f3, 1).add(e2, e4, f4, 1);
  return builder.build();
}

Expected quadric_expected(std::uint32_t p, std::uint32_t f) {
  const mpz_class q = pow_mpz(p, f);
  const mpz_class q2 = q * q;
  Expected e{CountVector(p), CountVector(p)};
  e.cc.add(0, q2 * q2);
  e.cc.add(2 * f, 2 * (q2 - 1) * q2);
  e.cc.add(3 * f, q * (q2 - 1) * (q2 - 1));
  e.ch.add(0, q2 * q2);
  e.ch.add(f, q2 * (q - 1) * (q + 1) * (q + 1));
  e.ch.add(2 * f, q2 * q2 - 1 - (q + 1) * (q + 1) * (q - 1));
  e.cc.prune();
  e.ch.prune();
  return e;
}

CatalogEntry heisenberg_entry(const CoefficientRing& ring) {
  CatalogEntry entry{"heisenberg", {{"ring", ring.describe()}}, heisenberg_table(ring), std::nullopt};
  if (ring.is_field()) {
    const std::uint32_t p = ring.p();
    const std::uint32_t f = ring.residue_degree();
    const mpz_class q = pow_mpz(p, f);
    Expected e{CountVector(p), CountVector(p)};
    e.cc.add(0, q);
    e.cc.add(f, q * q - 1);
    e.ch.add(0, q * q);
    e.ch.add(f, q - 1);
    entry.expected = e;
  }
  return entry;
}

CatalogEntry quadric_entry(std::uint32_t p, std::uint32_t f) {
  return {"quadric", {{"p", std::to_string(p)}, {"f", std::to_string(f)}}, quadric_table(p, f), quadric_expected(p, f)};
}

CatalogEntry boston_isaacs_entry(std::int64_t alpha, std::uint32_t p) {
  CatalogEntry entry{"boston-isaacs",
                     {{"alpha", std::to_string(alpha)}, {"p", std::to_string(p)}},
                     boston_isaacs_table(alpha, p),
                     std::nullopt};
  if (p % 2 == 1) {
    auto pc = pfaffian_case_vectors(entry.table);
    entry.expected = Expected{pc.cc, pc.ch};
  }
  return entry;
}

PfaffianCase pfaffian_case_vectors(const lie::Table& table, const EnumOptions& options) {
  if (!table.ring().is_field()) throw Error(Errc::kUnsupportedRing, "the Pfaffian case needs a field");
  const gf::Field& field = table.ring().field();
  const std::uint32_t p = table.ring().p();
  const std::uint32_t f = table.ring().residue_degree();
  auto adapted = lie::adapt_basis(table);
  auto mats = commat::build_commutator_matrices(adapted.table, adapted.a, adapted.b);
  const std::size_t a = mats.a;
  const std::size_t b = mats.b;
  if (a <= 2) throw Error(Errc::kHypothesesFailed, fmt::format("a = {} is not greater than 2", a));
  PfaffianCase out;
  out.a = a;
  out.b = b;
  out.census = commat::projective_rank_census(field, mats.B, options);
  std::set<std::size_t> ranks;
  for (const auto& [r, count] : out.census.counts) {
    if (count > 0) ranks.insert(r);
  }
  if (ranks != std::set<std::size_t>{a - 2, a}) {
    throw Error(Errc::kHypothesesFailed, "projective rank set is not {a-2, a}");
  }
  if (!out.census.line_condition) {
    throw Error(Errc::kHypothesesFailed,
                fmt::format("line condition fails: {} lines lie in the rank-deficient locus", out.census.deficient_lines));
  }
  out.n = out.census.counts.at(a - 2);

  const mpz_class q = pow_mpz(p, f);
  const mpz_class n = out.n;
  const std::uint64_t h = table.dim();
  const std::uint64_t zdim = lie::centre(table).log_order / f;
  // p-exponents: |Z| q^{-b+1}, |Z| q^{-b}, |G/G'| q^{-a+2}, |G/G'| q^{-a}
  out.cc = CountVector(p);
  out.cc.add(0, pow_mpz(p, zdim * f));
  out.cc.add((b - 1) * f, pow_mpz(p, (zdim - b + 1) * f) * n * (q * q - 1));
  out.cc.add(b * f, pow_mpz(p, (zdim - b) * f) * (pow_mpz(p, a * f) - 1 - n * (q * q - 1)));
  out.ch = CountVector(p);
  out.ch.add(0, pow_mpz(p, (h - b) * f));
  out.ch.add((a / 2 - 1) * f, pow_mpz(p, (h - b - a + 2) * f) * n * (q - 1));
  out.ch.add((a / 2) * f, pow_mpz(p, (h - b - a) * f) * (pow_mpz(p, b * f) - 1 - n * (q - 1)));
  out.cc.prune();
  out.ch.prune();
  out.k = pow_mpz(p, (h - a) * f) + pow_mpz(p, (h - b) * f) + pow_mpz(p, (h - a - b) * f) * (n * (q * q - 1) * (q - 1) - 1);
  return out;
}

}  // namespace pgc::catalog
