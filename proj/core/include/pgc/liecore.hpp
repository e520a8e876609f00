#pragma once

// Finite nilpotent Lie rings given by structure constants over GF(p^f) or Z/p^e.
// Indices are 0-based in the API; user-facing text (errors, .lie files) is 1-based.

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pgc/linalg.hpp"
#include "pgc/ring.hpp"

namespace pgc::lie {

using linalg::Mat;
using linalg::Vec;

struct Term {
  std::uint32_t k;
  Elem c;
  bool operator==(const Term&) const = default;
};

class StructureConstantTable {
 public:
  StructureConstantTable(std::string name, const CoefficientRing& ring, std::size_t h);
  StructureConstantTable(std::string name, RingPtr ring, std::size_t h);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::size_t dim() const { return h_; }

  // Sets [e_i, e_j] = sum c e_k (and [e_j, e_i] = -that). Zero terms are dropped.
  void set_bracket(std::size_t i, std::size_t j, std::vector<Term> terms);
  // [e_i, e_j] as sorted nonzero terms.
  const std::vector<Term>& bracket_terms(std::size_t i, std::size_t j) const { return dense_[i * h_ + j]; }
  // Entries with i < j and nonzero bracket.
  const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Term>>& entries() const { return entries_; }

  Vec bracket(const Vec& x, const Vec& y) const;
  // Column j holds [e_j, x].
  Mat ad_matrix(const Vec& x) const;

  bool operator==(const StructureConstantTable& o) const {
    return name_ == o.name_ && ring_->spec() == o.ring_->spec() && h_ == o.h_ && entries_ == o.entries_;
  }

 private:
  std::string name_;
  RingPtr ring_;
  std::size_t h_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Term>> entries_;
  std::vector<std::vector<Term>> dense_;
};

using Table = StructureConstantTable;

// Collects raw λ_ij^k as supplied (either order) and enforces antisymmetry on build.
class TableBuilder {
 public:
  TableBuilder(std::string name, const CoefficientRing& ring, std::size_t h);

  TableBuilder& add(std::size_t i, std::size_t j, std::size_t k, std::int64_t coeff);
  TableBuilder& add_elem(std::size_t i, std::size_t j, std::size_t k, Elem coeff);
  const Ring& ring() const { return *ring_; }
  // Throws AntisymmetryViolation(i,j,k) for λ_ii^k != 0 or inconsistent (i,j)/(j,i).
  Table build() const;

 private:
  std::string name_;
  RingPtr ring_;
  std::size_t h_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Elem> raw_;
};

struct SubspaceBasis {
  std::vector<Vec> vectors;
  // Over Z/p^e the i-th generator has order p^{length - valuations[i]}; zeros over fields.
  std::vector<std::uint32_t> valuations;
  std::uint32_t log_order = 0;  // log_p of the subgroup order

  std::size_t size() const { return vectors.size(); }
};

struct LowerCentralSeries {
  std::vector<SubspaceBasis> terms;  // γ_1, ..., γ_{c+1} = 0
  std::size_t nilpotency_class = 0;
};

struct AdaptedBasis {
  Mat change_of_basis;  // row i = new basis vector i in old coordinates
  std::size_t a = 0;
  std::size_t b = 0;
  Table table;
};

void validate(const Table& table);
void check_jacobi(const Table& table);

SubspaceBasis span(const Ring& ring, const std::vector<Vec>& vectors, std::size_t dim);
LowerCentralSeries lower_central_series(const Table& table);
std::size_t nilpotency_class(const Table& table);
// One row per (i, k): x -> coefficient of e_k in [e_i, x]; its kernel is the centre.
Mat centre_equations(const Table& table);
SubspaceBasis centre(const Table& table);
SubspaceBasis derived(const Table& table);

// Both window conditions of an adapted basis hold for the identity ordering.
bool is_adapted(const Table& table, std::size_t a, std::size_t b);
AdaptedBasis adapt_basis(const Table& table);

// Structure constants in the basis given by the rows of new_basis.
Table change_basis(const Table& table, const Mat& new_basis);
// Reinterpret the constants over GF(p^{f m}).
Table base_change(const Table& table, std::uint32_t m);

}  // namespace pgc::lie
