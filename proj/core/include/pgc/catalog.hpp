#pragma once

// Named class-2 examples: Heisenberg, the Boston–Isaacs family g_alpha, the quadric
// example, the prescribed-degree constructions, and the Pfaffian-case formulas.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "pgc/commat.hpp"
#include "pgc/count_vector.hpp"
#include "pgc/enum_options.hpp"
#include "pgc/liecore.hpp"

namespace pgc::catalog {

struct Expected {
  CountVector cc;
  CountVector ch;
};

struct CatalogEntry {
  std::string name;
  std::map<std::string, std::string> parameters;
  lie::Table table;
  std::optional<Expected> expected;
};

// Basis u, v, w with [v, u] = w.
lie::Table heisenberg_table(const CoefficientRing& ring);

enum class IsaacsVariant {
  // [x_r, x_{r+i}] = y_i for r <= i: the block form whose B is a sum of
  // Y_i Id_i blocks, rank set 2*I_0.
  kBlock,
  // [x_r, x_t] = y_{t-r} for every r < t <= 2j with t - r in I.
  kRelationList,
};

// Basis x_1..x_{2j}, then y_i for i in I (increasing); j = max I.
lie::Table isaacs_cd_table(const std::set<int>& I, std::uint32_t p, IsaacsVariant variant = IsaacsVariant::kBlock);
// Basis x_1..x_l, x~_1..x~_{l+n-1}, y_1..y_n; [x_i, x~_j] = y_{j-i+1} for i <= j <= i+n-1.
lie::Table fm_table(int l, int n, std::uint32_t p);
// Basis e_1..e_6, f_1..f_3. Throws ZeroAlpha when alpha = 0 mod p.
lie::Table boston_isaacs_table(std::int64_t alpha, std::uint32_t p);
// Basis e_1..e_4, f_1..f_4 over GF(p^f).
lie::Table quadric_table(std::uint32_t p, std::uint32_t f = 1);

// Reference vectors of the quadric example at q = p^f.
Expected quadric_expected(std::uint32_t p, std::uint32_t f = 1);
// Expected vectors where known in closed form.
CatalogEntry heisenberg_entry(const CoefficientRing& ring);
CatalogEntry quadric_entry(std::uint32_t p, std::uint32_t f = 1);
CatalogEntry boston_isaacs_entry(std::int64_t alpha, std::uint32_t p);

struct PfaffianCase {
  CountVector cc;
  CountVector ch;
  mpz_class k;
  std::uint64_t n = 0;  // points of P^{b-1} with rank a - 2
  std::size_t a = 0;
  std::size_t b = 0;
  commat::ProjectiveCensus census;
};

// Checks a > 2, projective rank set {a-2, a} and the line condition, then evaluates
// the Pfaffian-case formulas. Throws HypothesesFailed naming the failed condition.
PfaffianCase pfaffian_case_vectors(const lie::Table& table, const EnumOptions& options = {});

}  // namespace pgc::catalog
