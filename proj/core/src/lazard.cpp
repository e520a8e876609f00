#include "pgc/lazard.hpp"

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include <fmt/format.h>

#include "pgc/error.hpp"

namespace pgc::lazard {
namespace {

mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BchSeries build_bch(int c) {
  BchSeries s;
  s.c = c;
  s.basis = freenil::HallBasis(2, std::max(c, 1));
  s.terms.assign(c, {});
  freenil::Collector col(s.basis);
  std::vector<std::map<std::size_t, mpq_class>> acc(c);

  // Dynkin: sum over n and (r_1, s_1, ..., r_n, s_n) with r_i + s_i >= 1 of
  // (-1)^{n-1} / n * [X^{r_1} Y^{s_1} ... X^{r_n} Y^{s_n}] / (m * prod r_i! s_i!),
  // the bracket being right-nested and m the word length.
  std::vector<std::pair<int, int>> blocks;
  std::function<void(int)> rec = [&](int used) {
    if (!blocks.empty()) {
      const int n = static_cast<int>(blocks.size());
      std::vector<std::size_t> word;
      mpz_class denom = used;
      denom *= n;
      for (const auto& [r, s] : blocks) {
        for (int i = 0; i < r; ++i) word.push_back(0);
        for (int i = 0; i < s; ++i) word.push_back(1);
        denom *= factorial(r) * factorial(s);
      }
      freenil::Combination value{{word.back(), 1}};
      for (std::size_t i = word.size() - 1; i-- > 0 && !value.empty();) {
        value = col.bracket({{word[i], 1}}, value);
      }
      if (!value.empty()) {
        mpq_class coeff(n % 2 == 1 ? 1 : -1, 1);
        coeff /= denom;
        for (const auto& [idx, k] : value) acc[used - 1][idx] += coeff * k;
      }
    }
    for (int size = 1; used + size <= c; ++size) {
      for (int r = 0; r <= size; ++r) {
        blocks.emplace_back(r, size - r);
        rec(used + size);
        blocks.pop_back();
      }
    }
  };
  rec(0);
  for (int d = 0; d < c; ++d) {
    for (auto& [idx, q] : acc[d]) {
      q.canonicalize();
      if (q != 0) s.terms[d].emplace_back(idx, q);
    }
  }
  return s;
}

}  // namespace

const BchSeries& bch(int c) {
  if (c < 1) throw Error(Errc::kInvalidArgument, "BCH truncation must be at least 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BchSeries>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[c];
  if (!slot) slot = std::make_unique<BchSeries>(build_bch(c));
  return *slot;
}

LazardGroup::LazardGroup(const lie::Table& table) : table_(&table) {
  class_ = lie::nilpotency_class(table);
  if (class_ >= table.ring().p()) {
    throw Error(Errc::kClassTooLarge, fmt::format("class {} is not below p = {}", class_, table.ring().p()));
  }
  series_ = &bch(static_cast<int>(std::max<std::size_t>(class_, 1)));
  for (const auto& degree : series_->terms) {
    std::vector<std::pair<std::size_t, Elem>> red;
    for (const auto& [idx, q] : degree) red.emplace_back(idx, table.ring().from_rational(q));
    reduced_.push_back(std::move(red));
  }
}

GroupElement LazardGroup::star(const GroupElement& x, const GroupElement& y) const {
  const Ring& ring = table_->ring();
  const auto& hb = series_->basis;
  std::vector<GroupElement> val(hb.size());
  val[0] = x;
  val[1] = y;
  for (std::size_t k = 2; k < hb.size(); ++k) {
    const auto [u, v] = *hb[k].parents;
    val[k] = table_->bracket(val[u], val[v]);
  }
  GroupElement out(table_->dim(), 0);
  for (const auto& degree : reduced_) {
    for (const auto& [idx, c] : degree) {
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (val[idx][i] != 0) out[i] = ring.add(out[i], ring.mul(c, val[idx][i]));
      }
    }
  }
  return out;
}

GroupElement LazardGroup::inverse(const GroupElement& x) const {
  GroupElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = table_->ring().neg(x[i]);
  return out;
}

GroupElement LazardGroup::conjugate(const GroupElement& g, const GroupElement& x) const {
  return star(star(g, x), inverse(g));
}

std::uint64_t LazardGroup::order() const {
  std::uint64_t n = 1;
  const std::uint64_t r = table_->ring().order();
  for (std::size_t i = 0; i < table_->dim(); ++i) {
    if (n > UINT64_MAX / r) return 0;
    n *= r;
  }
  return n;
}

std::uint64_t LazardGroup::encode(const GroupElement& x) const {
  const std::uint64_t r = table_->ring().order();
  std::uint64_t idx = 0;
  for (Elem e : x) idx = idx * r + e;
  return idx;
}

GroupElement LazardGroup::decode(std::uint64_t index) const {
  const std::uint64_t r = table_->ring().order();
  GroupElement x(table_->dim());
  for (std::size_t i = x.size(); i-- > 0;) {
    x[i] = static_cast<Elem>(index % r);
    index /= r;
  }
  return x;
}

std::vector<GroupElement> LazardGroup::additive_generators() const {
  const Ring& ring = table_->ring();
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < table_->dim(); ++i) {
    for (std::uint32_t k = 0; k < ring.additive_rank(); ++k) {
      std::vector<std::uint32_t> coords(ring.additive_rank(), 0);
      coords[k] = 1;
      GroupElement g(table_->dim(), 0);
      g[i] = ring.from_additive_coords(coords);
      out.push_back(std::move(g));
    }
  }
  return out;
}

namespace {

int log_p_exact(std::uint64_t n, std::uint32_t p) {
  int k = 0;
  while (n > 1) {
    if (n % p != 0) return -1;
    n /= p;
    ++k;
  }
  return k;
}

void check_budget(const LazardGroup& g, const OracleOptions& options) {
  std::uint64_t n = g.order();
  if (n == 0 || n > options.budget) {
    throw Error(Errc::kBudgetExceeded, fmt::format("group order exceeds the oracle budget {}", options.budget));
  }
}

}  // namespace

CountVector conjugacy_census(const lie::Table& table, const OracleOptions& options) {
  LazardGroup G(table);
  check_budget(G, options);
  const std::uint64_t n = G.order();
  const std::uint32_t p = table.ring().p();
  auto gens = G.additive_generators();
  std::vector<bool> seen(n, false);
  CountVector cc(p);
  for (std::uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::deque<std::uint64_t> queue{start};
    seen[start] = true;
    std::uint64_t size = 0;
    while (!queue.empty()) {
      std::uint64_t cur = queue.front();
      queue.pop_front();
      ++size;
      GroupElement x = G.decode(cur);
      for (const auto& g : gens) {
        std::uint64_t y = G.encode(G.conjugate(g, x));
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    int e = log_p_exact(size, p);
    if (e < 0) throw Error(Errc::kInvalidArgument, fmt::format("class of size {} is not a power of p", size));
    cc.add(e, 1);
  }
  return cc;
}

std::uint64_t centralizer_order(const lie::Table& table, const GroupElement& x) {
  LazardGroup G(table);
  const std::uint64_t n = G.order();
  if (n == 0) throw Error(Errc::kBudgetExceeded, "group order overflows");
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    GroupElement y = G.decode(i);
    if (G.star(x, y) == G.star(y, x)) ++count;
  }
  return count;
}

CountVector coadjoint_census(const lie::Table& table, const OracleOptions& options) {
  LazardGroup G(table);
  check_budget(G, options);
  const Ring& ring = table.ring();
  const std::uint32_t p = ring.p();
  const std::size_t h = table.dim();
  const std::size_t rank = ring.additive_rank();
  const std::size_t N = h * rank;
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < ring.additive_exponent(); ++i) m *= p;

  auto additive = [&](const GroupElement& x) {
    std::vector<std::uint64_t> out;
    out.reserve(N);
    for (Elem e : x) {
      for (auto c : ring.additive_coords(e)) out.push_back(c);
    }
    return out;
  };
  auto basis = G.additive_generators();
  // Matrices of Ad_g on (Z/m)^N, stored transposed: row n = coordinates of Ad_g(a_n).
  std::vector<std::vector<std::vector<std::uint64_t>>> ad_t;
  for (const auto& g : basis) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& a : basis) rows.push_back(additive(G.conjugate(g, a)));
    ad_t.push_back(std::move(rows));
  }

  const std::uint64_t total = G.order();
  auto decode = [&](std::uint64_t idx) {
    std::vector<std::uint64_t> c(N);
    for (std::size_t i = N; i-- > 0;) {
      c[i] = idx % m;
      idx /= m;
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint64_t>& c) {
    std::uint64_t idx = 0;
    for (auto v : c) idx = idx * m + v;
    return idx;
  };
  std::vector<bool> seen(total, false);
  CountVector ch(p);
  for (std::uint64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::deque<std::uint64_t> queue{start};
    seen[start] = true;
    std::uint64_t size = 0;
    while (!queue.empty()) {
      std::uint64_t cur = queue.front();
      queue.pop_front();
      ++size;
      auto c = decode(cur);
      for (const auto& rows : ad_t) {
        // (omega o Ad_g)(a_n) = sum_k c_k Ad_g(a_n)_k
        std::vector<std::uint64_t> next(N, 0);
        for (std::size_t n = 0; n < N; ++n) {
          std::uint64_t s = 0;
          for (std::size_t k = 0; k < N; ++k) s = (s + c[k] * rows[n][k]) % m;
          next[n] = s;
        }
        std::uint64_t y = encode(next);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    int e = log_p_exact(size, p);
    if (e < 0 || e % 2 == 1) throw Error(Errc::kNonSquareOrbit, fmt::format("orbit of size {}", size));
    ch.add(e / 2, 1);
  }
  return ch;
}

}  // namespace pgc::lazard
