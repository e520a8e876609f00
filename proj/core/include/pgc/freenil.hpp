#pragma once

// Free nilpotent Lie rings f_{r,c}: Hall bases, structure constants by collection,
// and closed-form class/character data for F_{r,c}(F_q).
//
// Bracket convention: for basic u > v, [u, v] is +1 times the basic commutator
// with parents (u, v). For r = 2 the generators display as y < x.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgc/count_vector.hpp"
#include "pgc/liecore.hpp"
#include "pgc/poly_fit.hpp"

namespace pgc::freenil {

std::int64_t witt(int r, int i);
std::int64_t n_bound(int r, int c);
std::int64_t k_exponent(int r, int c, int i);
std::int64_t N_exponent(int r, int c);

struct BasicCommutator {
  std::size_t index = 0;
  int weight = 1;
  std::optional<std::pair<std::size_t, std::size_t>> parents;
  std::string display;
};

class HallBasis {
 public:
  HallBasis(int r, int c);

  int r() const { return r_; }
  int c() const { return c_; }
  std::size_t size() const { return elements_.size(); }
  const BasicCommutator& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<BasicCommutator>& elements() const { return elements_; }
  // layers()[w - 1] lists the indices of weight w.
  const std::vector<std::vector<std::size_t>>& layers() const { return layers_; }
  std::optional<std::size_t> index_of(std::size_t left, std::size_t right) const;
  std::optional<std::size_t> find(const std::string& display) const;

 private:
  int r_, c_;
  std::vector<BasicCommutator> elements_;
  std::vector<std::vector<std::size_t>> layers_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_parents_;
};

HallBasis hall_basis(int r, int c);

using Combination = std::vector<std::pair<std::size_t, std::int64_t>>;  // sorted by index

class Collector {
 public:
  explicit Collector(const HallBasis& basis) : basis_(&basis) {}

  // [b_u, b_v] in the Hall basis with weights above c truncated.
  const Combination& collect(std::size_t u, std::size_t v);
  // Bilinear extension to combinations.
  Combination bracket(const Combination& x, const Combination& y);

 private:
  const HallBasis* basis_;
  std::map<std::pair<std::size_t, std::size_t>, Combination> memo_;
};

Combination collect(std::size_t u, std::size_t v, const HallBasis& basis);

// Structure constants of f_{r,c}(Z) reduced into the ring. Throws ClassTooLarge
// when c >= p.
lie::Table free_table(int r, int c, const CoefficientRing& ring);
// Same table without the class guard, for pure rank counts in small characteristic.
lie::Table free_table_unchecked(int r, int c, const CoefficientRing& ring);
std::string free_table_name(int r, int c);

// Closed forms; q = p^f with p > c.
CountVector class_vector_closed(int r, int c, std::uint32_t p, std::uint32_t f);
std::set<int> char_degrees_closed(int r, int c);
CountVector char_vector_class2(int r, std::uint32_t p, std::uint32_t f);
// Carlitz–Hodges count #{y : rk B(y) = 2i} for the generic r x r skew matrix, base q.
CountVector nu_class2(int r, std::uint32_t p, std::uint32_t f);
mpz_class char_count_degree_q(int r, int c, std::uint32_t p, std::uint32_t f);

// Reference character vectors for (r,c) in {(2,3),(3,3),(2,4),(2,5)} as polynomials
// in q, keyed by the q-exponent of the degree.
std::map<int, QPolynomial> fixture_char_polynomials(int r, int c);

struct FixtureVectors {
  CountVector cc;  // class_vector_closed
  CountVector ch;  // reference polynomials
};
FixtureVectors fixture_vectors(int r, int c, std::uint32_t p, std::uint32_t f);

}  // namespace pgc::freenil
