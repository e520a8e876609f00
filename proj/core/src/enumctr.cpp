#include "pgc/enumctr.hpp"

#include <fmt/format.h>

#include "pgc/error.hpp"
#include "pgc/parallel.hpp"

namespace pgc::enumctr {

using linalg::Vec;
namespace {

std::uint64_t checked_power(std::uint64_t q, std::size_t n, std::uint64_t budget, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > budget / q) {
      throw Error(Errc::kBudgetExceeded, fmt::format("{}: {}^{} points exceed the budget {}", what, q, n, budget));
    }
    r *= q;
  }
  if (r > budget) throw Error(Errc::kBudgetExceeded, fmt::format("{}: {}^{} points exceed the budget {}", what, q, n, budget));
  return r;
}

// Odometer decoding: the last coordinate varies fastest.
void decode(std::uint64_t index, std::uint64_t q, std::vector<gf::Elem>& point) {
  for (std::size_t i = point.size(); i-- > 0;) {
    point[i] = static_cast<gf::Elem>(index % q);
    index /= q;
  }
}

std::vector<std::uint64_t> rank_counts(const gf::Field& field, const commat::LinearFormMatrix& m,
                                       const EnumOptions& options) {
  const std::uint64_t q = field.order();
  const std::uint64_t n = checked_power(q, m.nvars, options.budget, "rank distribution");
  const std::size_t max_rank = std::min(m.rows, m.cols);
  struct Worker {
    const gf::Field* field;
    const commat::LinearFormMatrix* m;
    std::uint64_t q;
    std::vector<gf::Elem> point;
    linalg::Mat scratch;
    std::vector<std::uint64_t> counts;
    void operator()(std::uint64_t i) {
      decode(i, q, point);
      commat::evaluate_into(*field, *m, point.data(), scratch);
      ++counts[linalg::rank_in_place(*field, scratch)];
    }
  };
  auto workers = run_partitioned(n, options.threads, [&] {
    return Worker{&field, &m, q, std::vector<gf::Elem>(m.nvars), {}, std::vector<std::uint64_t>(max_rank + 1, 0)};
  });
  std::vector<std::uint64_t> total(max_rank + 1, 0);
  for (const auto& w : workers) {
    for (std::size_t r = 0; r <= max_rank; ++r) total[r] += w.counts[r];
  }
  return total;
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
  if (num % den != 0) throw Error(Errc::kInexactDivision, fmt::format("{} / {}", num.get_str(), den.get_str()));
  return num / den;
}

}  // namespace

CountVector rank_distribution_A(const gf::Field& field, const commat::LinearFormMatrix& A, const EnumOptions& options) {
  auto counts = rank_counts(field, A, options);
  CountVector mu(field.order());
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] != 0) mu.add(static_cast<int>(r), mpz_class(static_cast<unsigned long>(counts[r])));
  }
  return mu;
}

CountVector rank_distribution_B(const gf::Field& field, const commat::LinearFormMatrix& B, const EnumOptions& options) {
  auto counts = rank_counts(field, B, options);
  CountVector nu(field.order());
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] == 0) continue;
    if (r % 2 == 1) throw Error(Errc::kNotSkew, fmt::format("odd rank {} of a skew matrix", r));
    nu.add(static_cast<int>(r / 2), mpz_class(static_cast<unsigned long>(counts[r])));
  }
  return nu;
}

void require_class_below_p(const lie::Table& table) {
  std::size_t c = lie::nilpotency_class(table);
  if (c >= table.ring().p()) {
    throw Error(Errc::kClassTooLarge, fmt::format("class {} is not below p = {}", c, table.ring().p()));
  }
}

Vectors vectors_matrix(const lie::Table& table, const EnumOptions& options) {
  const Ring& ring = table.ring();
  if (!ring.is_field()) throw Error(Errc::kUnsupportedRing, "the commutator-matrix path needs a field");
  if (options.check_class) require_class_below_p(table);
  const gf::Field& field = ring.field();
  const std::uint64_t q = field.order();
  const int f = static_cast<int>(field.degree());

  lie::AdaptedBasis ab = lie::adapt_basis(table);
  commat::CommutatorMatrices mats = commat::build_commutator_matrices(ab.table, ab.a, ab.b);
  checked_power(q, ab.a, options.budget, "A(x)");
  checked_power(q, ab.b, options.budget, "B(y)");
  CountVector mu = rank_distribution_A(field, mats.A, options);
  CountVector nu = rank_distribution_B(field, mats.B, options);

  const std::size_t h = table.dim();
  const std::size_t zdim = h - ab.a;
  Vectors out;
  out.method = "matrix";
  out.cc = CountVector(field.p());
  out.ch = CountVector(field.p());
  const mpz_class z_order = pow_mpz(q, zdim);
  const mpz_class ab_order = pow_mpz(q, h - ab.b);
  out.s_size = 0;
  out.s_size_dual = 0;
  for (const auto& [i, n] : mu.entries) {
    out.cc.add(i * f, exact_div(n * z_order, pow_mpz(q, i)));
    out.s_size += n * pow_mpz(q, ab.b - i);
  }
  for (const auto& [i, n] : nu.entries) {
    out.ch.add(i * f, exact_div(n * ab_order, pow_mpz(q, 2 * i)));
    out.s_size_dual += n * pow_mpz(q, ab.a - 2 * i);
  }
  out.k = out.cc.total();
  if (out.ch.total() != out.k) {
    throw Error(Errc::kInexactDivision, fmt::format("class count {} differs from character count {}", out.k.get_str(),
                                                    out.ch.total().get_str()));
  }
  return out;
}

Vectors vectors_dual(const lie::Table& table, const EnumOptions& options) {
  const Ring& ring = table.ring();
  if (options.check_class) require_class_below_p(table);
  const std::size_t h = table.dim();
  const std::uint32_t unit_log = ring.residue_degree();
  const std::uint32_t len = ring.length();
  const std::uint32_t g_log = static_cast<std::uint32_t>(h) * len * unit_log;
  const std::uint32_t p = ring.p();

  // Cocentre representatives: x = Q y with y_k ranging over R / p^{len - v_k}.
  linalg::Smith zs = linalg::smith_form(ring, lie::centre_equations(table), true);
  std::vector<std::vector<Elem>> ranges(h, std::vector<Elem>{0});
  std::uint32_t cocentre_log = 0;
  for (std::size_t k = 0; k < zs.valuations.size() && k < h; ++k) {
    if (zs.valuations[k] < len) {
      ranges[k] = ring.residues(len - zs.valuations[k]);
      cocentre_log += (len - zs.valuations[k]) * unit_log;
    }
  }
  const std::uint32_t z_log = g_log - cocentre_log;

  // Characters of g': c^T = w^T P with w_k in R / p^{len - v_k}.
  std::vector<Vec> gens;
  for (const auto& [ij, terms] : table.entries()) {
    Vec v(h, 0);
    for (const auto& t : terms) v[t.k] = t.c;
    gens.push_back(std::move(v));
  }
  linalg::Mat lmat(h, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    for (std::size_t r = 0; r < h; ++r) lmat(r, c) = gens[c][r];
  }
  linalg::Smith ds = linalg::smith_form(ring, lmat, true);
  std::vector<std::vector<Elem>> wranges;
  std::vector<std::size_t> wrows;
  std::uint32_t derived_log = 0;
  for (std::size_t k = 0; k < ds.valuations.size(); ++k) {
    if (ds.valuations[k] < len) {
      wranges.push_back(ring.residues(len - ds.valuations[k]));
      wrows.push_back(k);
      derived_log += (len - ds.valuations[k]) * unit_log;
    }
  }

  auto count_of = [&](const std::vector<std::vector<Elem>>& rs) {
    std::uint64_t n = 1;
    for (const auto& r : rs) {
      if (n > options.budget / r.size()) throw Error(Errc::kBudgetExceeded, "dual path enumeration exceeds the budget");
      n *= r.size();
    }
    return n;
  };
  const std::uint64_t n_cosets = count_of(ranges);
  const std::uint64_t n_chars = count_of(wranges);

  struct ClassWorker {
    const lie::Table* table;
    const Ring* ring;
    const std::vector<std::vector<Elem>>* ranges;
    const linalg::Mat* Q;
    std::vector<std::uint64_t> counts;
    void operator()(std::uint64_t index) {
      const std::size_t h = table->dim();
      Vec y(h, 0);
      for (std::size_t k = h; k-- > 0;) {
        const auto& r = (*ranges)[k];
        y[k] = r[index % r.size()];
        index /= r.size();
      }
      Vec x = linalg::apply(*ring, *Q, y);
      std::uint32_t im = linalg::image_log_order(*ring, table->ad_matrix(x));
      if (im >= counts.size()) counts.resize(im + 1, 0);
      ++counts[im];
    }
  };
  auto cworkers = run_partitioned(n_cosets, options.threads, [&] {
    return ClassWorker{&table, &ring, &ranges, &zs.Q, {}};
  });

  struct CharWorker {
    const lie::Table* table;
    const Ring* ring;
    const std::vector<std::vector<Elem>>* wranges;
    const std::vector<std::size_t>* wrows;
    const linalg::Mat* P;
    std::uint32_t g_log;
    std::vector<std::uint64_t> counts;  // by log_p |g : Rad|
    void operator()(std::uint64_t index) {
      const std::size_t h = table->dim();
      Vec w(P->rows, 0);
      for (std::size_t k = wranges->size(); k-- > 0;) {
        const auto& r = (*wranges)[k];
        w[(*wrows)[k]] = r[index % r.size()];
        index /= r.size();
      }
      Vec c = linalg::apply_left(*ring, w, *P);
      linalg::Mat K(h, h);
      for (const auto& [ij, terms] : table->entries()) {
        Elem v = 0;
        for (const auto& t : terms) v = ring->add(v, ring->mul(c[t.k], t.c));
        if (v == 0) continue;
        K(ij.second, ij.first) = v;
        K(ij.first, ij.second) = ring->neg(v);
      }
      std::uint32_t index_log = g_log - linalg::kernel_log_order(*ring, K);
      if (index_log >= counts.size()) counts.resize(index_log + 1, 0);
      ++counts[index_log];
    }
  };
  auto dworkers = run_partitioned(n_chars, options.threads, [&] {
    return CharWorker{&table, &ring, &wranges, &wrows, &ds.P, g_log, {}};
  });

  Vectors out;
  out.method = "dual";
  out.cc = CountVector(p);
  out.ch = CountVector(p);
  out.s_size = 0;
  out.s_size_dual = 0;
  std::vector<std::uint64_t> ccount, dcount;
  for (const auto& w : cworkers) {
    if (w.counts.size() > ccount.size()) ccount.resize(w.counts.size(), 0);
    for (std::size_t i = 0; i < w.counts.size(); ++i) ccount[i] += w.counts[i];
  }
  for (const auto& w : dworkers) {
    if (w.counts.size() > dcount.size()) dcount.resize(w.counts.size(), 0);
    for (std::size_t i = 0; i < w.counts.size(); ++i) dcount[i] += w.counts[i];
  }
  const mpz_class z_order = pow_mpz(p, z_log);
  for (std::size_t i = 0; i < ccount.size(); ++i) {
    if (ccount[i] == 0) continue;
    mpz_class n(static_cast<unsigned long>(ccount[i]));
    out.cc.add(static_cast<int>(i), exact_div(n * z_order, pow_mpz(p, i)));
    out.s_size += n * pow_mpz(p, derived_log - i);
  }
  const mpz_class ab_order = pow_mpz(p, g_log - derived_log);
  for (std::size_t i = 0; i < dcount.size(); ++i) {
    if (dcount[i] == 0) continue;
    if (i % 2 == 1) throw Error(Errc::kNonSquareOrbit, fmt::format("|g : Rad| = p^{}", i));
    mpz_class n(static_cast<unsigned long>(dcount[i]));
    out.ch.add(static_cast<int>(i / 2), exact_div(n * ab_order, pow_mpz(p, i)));
    // |Rad / z| = |g/z| p^{-i}
    out.s_size_dual += n * pow_mpz(p, cocentre_log - i);
  }
  out.k = out.cc.total();
  if (out.ch.total() != out.k) {
    throw Error(Errc::kInexactDivision, fmt::format("class count {} differs from character count {}", out.k.get_str(),
                                                    out.ch.total().get_str()));
  }
  return out;
}

Vectors compute_vectors(const lie::Table& table, Method method, const EnumOptions& options) {
  switch (method) {
    case Method::kMatrix: return vectors_matrix(table, options);
    case Method::kDual: return vectors_dual(table, options);
    case Method::kAuto: break;
  }
  return table.ring().is_field() ? vectors_matrix(table, options) : vectors_dual(table, options);
}

ClassNumber class_number(const lie::Table& table, Method method, const EnumOptions& options) {
  Vectors v = compute_vectors(table, method, options);
  return {v.k, v.s_size};
}

}  // namespace pgc::enumctr
