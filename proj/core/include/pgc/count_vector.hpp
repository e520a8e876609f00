#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace pgc {

// Exact counts indexed by an exponent of `base`: class vectors and character
// vectors use base p, rank distributions use base q.
struct CountVector {
  std::uint64_t base = 1;
  std::map<int, mpz_class> entries;

  CountVector() = default;
  explicit CountVector(std::uint64_t b) : base(b) {}

  void add(int exponent, const mpz_class& count);
  mpz_class total() const;
  // sum entries[i] * base^{scale * i}
  mpz_class weighted(int scale) const;
  mpz_class at(int exponent) const;
  // Drops zero entries; equality ignores them.
  void prune();
  std::string format() const;

  bool operator==(const CountVector& o) const;
};

mpz_class pow_mpz(std::uint64_t base, unsigned long exponent);

}  // namespace pgc
