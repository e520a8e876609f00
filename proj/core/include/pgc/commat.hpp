#pragma once

// Commutator matrices A(X) (a x b) and B(Y) (a x a, skew) of an adapted table.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pgc/enum_options.hpp"
#include "pgc/liecore.hpp"

namespace pgc::commat {

using linalg::Mat;

struct LinearTerm {
  std::uint32_t var;
  gf::Elem coeff;
  bool operator==(const LinearTerm&) const = default;
};

struct LinearFormMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nvars = 0;
  bool skew = false;
  std::vector<std::vector<LinearTerm>> entries;  // row-major, sorted by var

  LinearFormMatrix() = default;
  LinearFormMatrix(std::size_t r, std::size_t c, std::size_t n, bool is_skew)
      : rows(r), cols(c), nvars(n), skew(is_skew), entries(r * c) {}

  const std::vector<LinearTerm>& entry(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  std::vector<LinearTerm>& entry(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  bool operator==(const LinearFormMatrix&) const = default;
};

struct CommutatorMatrices {
  LinearFormMatrix A;
  LinearFormMatrix B;
  std::size_t a = 0;
  std::size_t b = 0;
};

CommutatorMatrices build_commutator_matrices(const lie::Table& adapted, std::size_t a, std::size_t b);
// adapt_basis followed by build_commutator_matrices.
CommutatorMatrices commutator_matrices(const lie::Table& table);

Mat evaluate(const gf::Field& field, const LinearFormMatrix& m, const std::vector<gf::Elem>& point);
void evaluate_into(const gf::Field& field, const LinearFormMatrix& m, const gf::Elem* point, Mat& out);
std::size_t rank(const gf::Field& field, const Mat& m);
gf::Elem pfaffian(const gf::Field& field, const Mat& m);

// Row-per-line text; variables named <var_prefix>1, <var_prefix>2, ...
std::string to_string(const gf::Field& field, const LinearFormMatrix& m, const std::string& var_prefix);

struct ProjectiveCensus {
  std::map<std::size_t, std::uint64_t> counts;  // rank -> number of points of P^{b-1}
  bool line_condition = true;                    // every line meets the full-rank locus
  std::uint64_t deficient_lines = 0;             // lines lying entirely in lower rank
};

// Rank census of B over P^{nvars-1}(F_q); full rank means rank == B.rows.
ProjectiveCensus projective_rank_census(const gf::Field& field, const LinearFormMatrix& B,
                                        const EnumOptions& options = {});

// Number of points of P^{n-1}(F_q) and the bijection with normalized vectors
// (first nonzero coordinate 1).
std::uint64_t projective_size(std::uint64_t q, std::size_t n);
std::vector<gf::Elem> projective_point(std::uint64_t q, std::size_t n, std::uint64_t index);
std::uint64_t projective_index(const gf::Field& field, std::vector<gf::Elem> v);

}  // namespace pgc::commat
