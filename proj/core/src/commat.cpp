#include "pgc/commat.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "pgc/error.hpp"
#include "pgc/parallel.hpp"

namespace pgc::commat {

CommutatorMatrices build_commutator_matrices(const lie::Table& adapted, std::size_t a, std::size_t b) {
  const Ring& ring = adapted.ring();
  if (!ring.is_field()) throw Error(Errc::kUnsupportedRing, "commutator matrices need a field");
  if (!lie::is_adapted(adapted, a, b)) throw Error(Errc::kNotAdapted, fmt::format("table {} is not adapted", adapted.name()));
  const std::size_t h = adapted.dim();
  const std::size_t tail = h - b;
  CommutatorMatrices out{LinearFormMatrix(a, b, a, false), LinearFormMatrix(a, a, b, true), a, b};
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      for (const auto& t : adapted.bracket_terms(i, j)) {
        if (t.k < tail) continue;
        const auto k = static_cast<std::uint32_t>(t.k - tail);
        out.A.entry(i, k).push_back({static_cast<std::uint32_t>(j), t.c});
        out.B.entry(i, j).push_back({k, t.c});
      }
    }
  }
  for (auto& e : out.A.entries) {
    std::sort(e.begin(), e.end(), [](const LinearTerm& x, const LinearTerm& y) { return x.var < y.var; });
  }
  return out;
}

CommutatorMatrices commutator_matrices(const lie::Table& table) {
  lie::AdaptedBasis ab = lie::adapt_basis(table);
  return build_commutator_matrices(ab.table, ab.a, ab.b);
}

void evaluate_into(const gf::Field& field, const LinearFormMatrix& m, const gf::Elem* point, Mat& out) {
  out.rows = m.rows;
  out.cols = m.cols;
  out.data.resize(m.rows * m.cols);
  for (std::size_t idx = 0; idx < m.entries.size(); ++idx) {
    gf::Elem s = 0;
    for (const auto& t : m.entries[idx]) {
      gf::Elem x = point[t.var];
      if (x != 0) s = field.add(s, field.mul(t.coeff, x));
    }
    out.data[idx] = s;
  }
}

Mat evaluate(const gf::Field& field, const LinearFormMatrix& m, const std::vector<gf::Elem>& point) {
  if (point.size() != m.nvars) {
    throw Error(Errc::kDimensionMismatch, fmt::format("point has {} coordinates, matrix has {} variables", point.size(), m.nvars));
  }
  Mat out;
  evaluate_into(field, m, point.data(), out);
  return out;
}

std::size_t rank(const gf::Field& field, const Mat& m) { return linalg::rank(field, m); }

namespace {

gf::Elem pfaffian_rec(const gf::Field& field, const Mat& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  const std::size_t first = idx[0];
  gf::Elem total = 0;
  for (std::size_t pos = 1; pos < idx.size(); ++pos) {
    const std::size_t j = idx[pos];
    gf::Elem entry = m(first, j);
    if (entry == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t q = 1; q < idx.size(); ++q) {
      if (q != pos) rest.push_back(idx[q]);
    }
    gf::Elem term = field.mul(entry, pfaffian_rec(field, m, rest));
    // 1-based column pos + 1: sign (-1)^{pos+1}
    total = (pos % 2 == 1) ? field.add(total, term) : field.sub(total, term);
  }
  return total;
}

}  // namespace

gf::Elem pfaffian(const gf::Field& field, const Mat& m) {
  if (m.rows != m.cols) throw Error(Errc::kNotSkew, "pfaffian of a non-square matrix");
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (m(i, i) != 0) throw Error(Errc::kNotSkew, "nonzero diagonal");
    for (std::size_t j = i + 1; j < m.cols; ++j) {
      if (m(i, j) != field.neg(m(j, i))) throw Error(Errc::kNotSkew, fmt::format("entries ({},{}) and ({},{})", i + 1, j + 1, j + 1, i + 1));
    }
  }
  if (m.rows % 2 == 1) return 0;
  std::vector<std::size_t> idx(m.rows);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(field, m, idx);
}

std::string to_string(const gf::Field& field, const LinearFormMatrix& m, const std::string& var_prefix) {
  std::string out;
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      std::string cell;
      for (const auto& t : m.entry(r, c)) {
        std::string coeff = t.coeff == 1 ? "" : field.format(t.coeff) + "*";
        cell += fmt::format("{}{}{}{}", cell.empty() ? "" : " + ", coeff, var_prefix, t.var + 1);
      }
      out += (c == 0 ? "" : "  ") + (cell.empty() ? std::string("0") : cell);
    }
    out += "\n";
  }
  return out;
}

std::uint64_t projective_size(std::uint64_t q, std::size_t n) {
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += pw;
    pw *= q;
  }
  return total;
}

std::vector<gf::Elem> projective_point(std::uint64_t q, std::size_t n, std::uint64_t index) {
  std::vector<gf::Elem> v(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::uint64_t block = 1;
    for (std::size_t i = lead + 1; i < n; ++i) block *= q;
    if (index < block) {
      v[lead] = 1;
      for (std::size_t i = n; i-- > lead + 1;) {
        v[i] = static_cast<gf::Elem>(index % q);
        index /= q;
      }
      return v;
    }
    index -= block;
  }
  throw Error(Errc::kInvalidArgument, "projective index out of range");
}

std::uint64_t projective_index(const gf::Field& field, std::vector<gf::Elem> v) {
  const std::size_t n = v.size();
  const std::uint64_t q = field.order();
  std::size_t lead = 0;
  while (lead < n && v[lead] == 0) ++lead;
  if (lead == n) throw Error(Errc::kInvalidArgument, "zero vector has no projective point");
  gf::Elem s = field.inv(v[lead]);
  std::uint64_t offset = 0;
  for (std::size_t l = 0; l < lead; ++l) {
    std::uint64_t block = 1;
    for (std::size_t i = l + 1; i < n; ++i) block *= q;
    offset += block;
  }
  std::uint64_t local = 0;
  for (std::size_t i = lead + 1; i < n; ++i) local = local * q + field.mul(v[i], s);
  return offset + local;
}

ProjectiveCensus projective_rank_census(const gf::Field& field, const LinearFormMatrix& B, const EnumOptions& options) {
  const std::size_t n = B.nvars;
  if (n == 0) throw Error(Errc::kInvalidArgument, "projective census needs at least one variable");
  const std::uint64_t q = field.order();
  const std::uint64_t npoints = projective_size(q, n);
  if (npoints > options.budget) {
    throw Error(Errc::kBudgetExceeded, fmt::format("{} projective points exceed the budget {}", npoints, options.budget));
  }
  std::vector<std::uint8_t> ranks(npoints, 0);
  struct Worker {
    const gf::Field* field;
    const LinearFormMatrix* B;
    std::uint64_t q;
    std::size_t n;
    std::vector<std::uint8_t>* ranks;
    Mat scratch;
    void operator()(std::uint64_t i) {
      auto pt = projective_point(q, n, i);
      evaluate_into(*field, *B, pt.data(), scratch);
      (*ranks)[i] = static_cast<std::uint8_t>(linalg::rank_in_place(*field, scratch));
    }
  };
  run_partitioned(npoints, options.threads, [&] { return Worker{&field, &B, q, n, &ranks, {}}; });

  ProjectiveCensus out;
  std::vector<std::uint64_t> deficient;
  for (std::uint64_t i = 0; i < npoints; ++i) {
    ++out.counts[ranks[i]];
    if (ranks[i] < B.rows) deficient.push_back(i);
  }
  if (deficient.size() * deficient.size() > options.budget) {
    throw Error(Errc::kBudgetExceeded, "line enumeration over the deficient locus exceeds the budget");
  }
  // Each line is visited from the pair of its two smallest point indices.
  for (std::size_t x = 0; x < deficient.size(); ++x) {
    auto p1 = projective_point(q, n, deficient[x]);
    for (std::size_t y = x + 1; y < deficient.size(); ++y) {
      auto p2 = projective_point(q, n, deficient[y]);
      bool canonical = true;
      bool inside = true;
      for (gf::Elem t = 1; t < q && canonical; ++t) {
        std::vector<gf::Elem> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = field.add(p2[k], field.mul(t, p1[k]));
        std::uint64_t idx = projective_index(field, v);
        if (idx < deficient[y]) canonical = false;
        if (ranks[idx] >= B.rows) inside = false;
      }
      if (canonical && inside) ++out.deficient_lines;
    }
  }
  out.line_condition = out.deficient_lines == 0;
  return out;
}

}  // namespace pgc::commat
