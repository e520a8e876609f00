#include "pgc/linalg.hpp"

#include <algorithm>

#include "pgc/error.hpp"

namespace pgc::linalg {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::kDimensionMismatch, "row length");
    std::copy(rows[r].begin(), rows[r].end(), m.data.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data.begin() + static_cast<std::ptrdiff_t>(r * cols),
             data.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
}

Vec Mat::col(std::size_t c) const {
  Vec out(rows);
  for (std::size_t r = 0; r < rows; ++r) out[r] = (*this)(r, c);
  return out;
}

Mat multiply(const Ring& ring, const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw Error(Errc::kDimensionMismatch, "matrix product");
  Mat out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out(i, j) = ring.add(out(i, j), ring.mul(x, b(k, j)));
      }
    }
  }
  return out;
}

Vec apply(const Ring& ring, const Mat& a, const Vec& x) {
  if (a.cols != x.size()) throw Error(Errc::kDimensionMismatch, "matrix-vector product");
  Vec out(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    Elem s = 0;
    for (std::size_t j = 0; j < a.cols; ++j) s = ring.add(s, ring.mul(a(i, j), x[j]));
    out[i] = s;
  }
  return out;
}

Vec apply_left(const Ring& ring, const Vec& x, const Mat& a) {
  if (a.rows != x.size()) throw Error(Errc::kDimensionMismatch, "vector-matrix product");
  Vec out(a.cols, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols; ++j) out[j] = ring.add(out[j], ring.mul(x[i], a(i, j)));
  }
  return out;
}

namespace {

void swap_rows(Mat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(Mat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}

// row_dst += f * row_src
void add_row(const Ring& ring, Mat& m, std::size_t dst, std::size_t src, Elem f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (m(src, c) != 0) m(dst, c) = ring.add(m(dst, c), ring.mul(f, m(src, c)));
  }
}

void add_col(const Ring& ring, Mat& m, std::size_t dst, std::size_t src, Elem f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (m(r, src) != 0) m(r, dst) = ring.add(m(r, dst), ring.mul(f, m(r, src)));
  }
}

void scale_row(const Ring& ring, Mat& m, std::size_t r, Elem s) {
  for (std::size_t c = 0; c < m.cols; ++c) m(r, c) = ring.mul(m(r, c), s);
}

void scale_col(const Ring& ring, Mat& m, std::size_t c, Elem s) {
  for (std::size_t r = 0; r < m.rows; ++r) m(r, c) = ring.mul(m(r, c), s);
}

}  // namespace

Smith smith_form(const Ring& ring, Mat m, bool with_transforms) {
  Smith out;
  const std::size_t n_diag = std::min(m.rows, m.cols);
  out.valuations.assign(n_diag, ring.length());
  if (with_transforms) {
    out.P = Mat::identity(m.rows);
    out.P_inv = Mat::identity(m.rows);
    out.Q = Mat::identity(m.cols);
  }
  for (std::size_t t = 0; t < n_diag; ++t) {
    // Pivot of minimal valuation; first in row-major order among ties.
    std::uint32_t best = ring.length();
    std::size_t pr = 0, pc = 0;
    for (std::size_t r = t; r < m.rows && best > 0; ++r) {
      for (std::size_t c = t; c < m.cols; ++c) {
        Elem x = m(r, c);
        if (x == 0) continue;
        std::uint32_t v = ring.valuation(x);
        if (v < best) {
          best = v;
          pr = r;
          pc = c;
          if (v == 0) break;
        }
      }
    }
    if (best == ring.length()) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);
    if (with_transforms) {
      swap_rows(out.P, t, pr);
      swap_cols(out.P_inv, t, pr);
      swap_cols(out.Q, t, pc);
    }
    // Normalize the pivot to p^v.
    Elem pivot = m(t, t);
    Elem pk = ring.uniformizer_power(best);
    Elem unit = ring.divide_exact(pivot, pk);
    Elem unit_inv = ring.inv(unit);
    scale_row(ring, m, t, unit_inv);
    if (with_transforms) {
      scale_row(ring, out.P, t, unit_inv);
      scale_col(ring, out.P_inv, t, unit);
    }
    pivot = m(t, t);
    for (std::size_t r = t + 1; r < m.rows; ++r) {
      if (m(r, t) == 0) continue;
      Elem f = ring.divide_exact(m(r, t), pivot);
      add_row(ring, m, r, t, ring.neg(f));
      if (with_transforms) {
        add_row(ring, out.P, r, t, ring.neg(f));
        add_col(ring, out.P_inv, t, r, f);
      }
    }
    for (std::size_t c = t + 1; c < m.cols; ++c) {
      if (m(t, c) == 0) continue;
      Elem f = ring.divide_exact(m(t, c), pivot);
      add_col(ring, m, c, t, ring.neg(f));
      if (with_transforms) add_col(ring, out.Q, c, t, ring.neg(f));
    }
    out.valuations[t] = best;
  }
  return out;
}

std::uint32_t image_log_order(const Ring& ring, const Mat& m) {
  Smith s = smith_form(ring, m, false);
  std::uint32_t total = 0;
  for (auto v : s.valuations) total += (ring.length() - v) * ring.residue_degree();
  return total;
}

std::uint32_t kernel_log_order(const Ring& ring, const Mat& m) {
  return static_cast<std::uint32_t>(m.cols) * ring.length() * ring.residue_degree() - image_log_order(ring, m);
}

Span column_span(const Ring& ring, const Mat& m) {
  Smith s = smith_form(ring, m, true);
  Span out;
  for (std::size_t k = 0; k < s.valuations.size(); ++k) {
    std::uint32_t v = s.valuations[k];
    if (v >= ring.length()) continue;
    Vec g = s.P_inv.col(k);
    Elem pk = ring.uniformizer_power(v);
    for (auto& x : g) x = ring.mul(x, pk);
    out.generators.push_back(std::move(g));
    out.valuations.push_back(v);
    out.log_order += (ring.length() - v) * ring.residue_degree();
  }
  return out;
}

Mat inverse(const Ring& ring, Mat m) {
  if (m.rows != m.cols) throw Error(Errc::kDimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows;
  Mat inv = Mat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = n;
    for (std::size_t r = c; r < n; ++r) {
      if (ring.is_unit(m(r, c))) {
        pr = r;
        break;
      }
    }
    if (pr == n) throw Error(Errc::kDivisionByZero, "matrix is singular");
    swap_rows(m, c, pr);
    swap_rows(inv, c, pr);
    Elem s = ring.inv(m(c, c));
    scale_row(ring, m, c, s);
    scale_row(ring, inv, c, s);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      Elem f = ring.neg(m(r, c));
      add_row(ring, m, r, c, f);
      add_row(ring, inv, r, c, f);
    }
  }
  return inv;
}

std::size_t rank_in_place(const gf::Field& field, Mat& m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pr = m.rows;
    for (std::size_t r = rank; r < m.rows; ++r) {
      if (m(r, c) != 0) {
        pr = r;
        break;
      }
    }
    if (pr == m.rows) continue;
    swap_rows(m, rank, pr);
    Elem inv = field.inv(m(rank, c));
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      Elem x = m(r, c);
      if (x == 0) continue;
      Elem f = field.neg(field.mul(x, inv));
      for (std::size_t k = c; k < m.cols; ++k) {
        Elem y = m(rank, k);
        if (y != 0) m(r, k) = field.add(m(r, k), field.mul(f, y));
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const gf::Field& field, Mat m) { return rank_in_place(field, m); }

gf::Elem determinant(const gf::Field& field, Mat m) {
  if (m.rows != m.cols) throw Error(Errc::kDimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows;
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = n;
    for (std::size_t r = c; r < n; ++r) {
      if (m(r, c) != 0) {
        pr = r;
        break;
      }
    }
    if (pr == n) return 0;
    if (pr != c) {
      swap_rows(m, c, pr);
      det = field.neg(det);
    }
    det = field.mul(det, m(c, c));
    Elem inv = field.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      Elem x = m(r, c);
      if (x == 0) continue;
      Elem f = field.neg(field.mul(x, inv));
      for (std::size_t k = c; k < n; ++k) m(r, k) = field.add(m(r, k), field.mul(f, m(c, k)));
    }
  }
  return det;
}

Vec Echelon::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem x = v[pivots_[i]];
    if (x == 0) continue;
    Elem f = field_->neg(x);
    const Vec& row = rows_[i];
    for (std::size_t k = 0; k < dim_; ++k) {
      if (row[k] != 0) v[k] = field_->add(v[k], field_->mul(f, row[k]));
    }
  }
  return v;
}

bool Echelon::contains(Vec v) const {
  v = reduce(std::move(v));
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

bool Echelon::insert(Vec v) {
  if (v.size() != dim_) throw Error(Errc::kDimensionMismatch, "echelon vector length");
  v = reduce(std::move(v));
  std::size_t lead = 0;
  while (lead < dim_ && v[lead] == 0) ++lead;
  if (lead == dim_) return false;
  Elem s = field_->inv(v[lead]);
  for (auto& x : v) x = field_->mul(x, s);
  for (auto& row : rows_) {
    Elem x = row[lead];
    if (x == 0) continue;
    Elem f = field_->neg(x);
    for (std::size_t k = 0; k < dim_; ++k) {
      if (v[k] != 0) row[k] = field_->add(row[k], field_->mul(f, v[k]));
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

std::vector<Vec> Echelon::basis() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<Vec> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(rows_[i]);
  return out;
}

std::vector<Vec> nullspace(const gf::Field& field, const Mat& m) {
  Echelon e(field, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) e.insert(m.row(r));
  std::vector<Vec> rows = e.basis();
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(m.cols, false);
  for (const auto& row : rows) {
    std::size_t lead = 0;
    while (row[lead] == 0) ++lead;
    pivot_of_row.push_back(lead);
    is_pivot[lead] = true;
  }
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) v[pivot_of_row[i]] = field.neg(rows[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace pgc::linalg
