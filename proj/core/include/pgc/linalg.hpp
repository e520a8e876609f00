#pragma once

#include <cstddef>
#include <vector>

#include "pgc/ring.hpp"

namespace pgc::linalg {

using Vec = std::vector<Elem>;

struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Elem& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  bool operator==(const Mat&) const = default;
};

Mat multiply(const Ring& ring, const Mat& a, const Mat& b);
Vec apply(const Ring& ring, const Mat& a, const Vec& x);  // a * x
Vec apply_left(const Ring& ring, const Vec& x, const Mat& a);  // x^T * a

// P * M * Q = D with D diagonal, D_kk = p^{valuations[k]} (valuation == length()
// means the diagonal entry is zero). P_inv = P^{-1}.
struct Smith {
  std::vector<std::uint32_t> valuations;  // length min(rows, cols)
  Mat P, P_inv, Q;
};

Smith smith_form(const Ring& ring, Mat m, bool with_transforms = true);

// log_p of the order of the column span, and of the kernel {x : M x = 0}.
std::uint32_t image_log_order(const Ring& ring, const Mat& m);
std::uint32_t kernel_log_order(const Ring& ring, const Mat& m);

// Generators of the column span: p^{v_k} * P_inv[:, k] for v_k < length().
struct Span {
  std::vector<Vec> generators;
  std::vector<std::uint32_t> valuations;
  std::uint32_t log_order = 0;
};
Span column_span(const Ring& ring, const Mat& m);

// Inverse over a local ring; throws DivisionByZero when singular.
Mat inverse(const Ring& ring, Mat m);

// Field-only routines.
std::size_t rank(const gf::Field& field, Mat m);
std::size_t rank_in_place(const gf::Field& field, Mat& m);
gf::Elem determinant(const gf::Field& field, Mat m);

// Incremental reduced row echelon form over a field. Pivot: leftmost nonzero column,
// scaled to 1.
class Echelon {
 public:
  Echelon(const gf::Field& field, std::size_t dim) : field_(&field), dim_(dim) {}

  // Returns true when v was independent of the rows so far.
  bool insert(Vec v);
  bool contains(Vec v) const;
  Vec reduce(Vec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  // Rows sorted by pivot column.
  std::vector<Vec> basis() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  const gf::Field* field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Basis of {x : M x = 0} over a field.
std::vector<Vec> nullspace(const gf::Field& field, const Mat& m);

}  // namespace pgc::linalg
