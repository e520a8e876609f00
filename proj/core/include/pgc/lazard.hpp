#pragma once

// Brute-force oracle: the Lazard group exp(g) with the truncated Hausdorff series,
// conjugacy classes, centralizers, and co-adjoint orbits.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pgc/count_vector.hpp"
#include "pgc/freenil.hpp"
#include "pgc/liecore.hpp"

namespace pgc::lazard {

using GroupElement = linalg::Vec;

struct BchSeries {
  int c = 1;
  freenil::HallBasis basis{2, 1};  // f_{2,c}; X = generator 1 ("y"), Y = generator 2 ("x")
  // terms[i - 1]: degree-i part as (Hall index, coefficient).
  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> terms;
};

// Cached per c; safe to call concurrently.
const BchSeries& bch(int c);

struct OracleOptions {
  std::uint64_t budget = 1'000'000;  // maximum group order
};

class LazardGroup {
 public:
  explicit LazardGroup(const lie::Table& table);

  const lie::Table& table() const { return *table_; }
  std::size_t nilpotency_class() const { return class_; }

  GroupElement star(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  // g * x * g^{-1}
  GroupElement conjugate(const GroupElement& g, const GroupElement& x) const;

  // |G| if it fits in 64 bits (0 otherwise).
  std::uint64_t order() const;
  std::uint64_t encode(const GroupElement& x) const;
  GroupElement decode(std::uint64_t index) const;
  // Additive generators e_i * u_k of g (u_k generating (R, +)).
  std::vector<GroupElement> additive_generators() const;

 private:
  const lie::Table* table_;
  std::size_t class_ = 0;
  const BchSeries* series_ = nullptr;
  std::vector<std::vector<std::pair<std::size_t, Elem>>> reduced_;  // per degree
};

CountVector conjugacy_census(const lie::Table& table, const OracleOptions& options = {});
std::uint64_t centralizer_order(const lie::Table& table, const GroupElement& x);
CountVector coadjoint_census(const lie::Table& table, const OracleOptions& options = {});

}  // namespace pgc::lazard
