#include "pgc/freenil.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "pgc/error.hpp"

namespace pgc::freenil {
namespace {

int mobius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

void require_rc(int r, int c) {
  if (r < 2) throw Error(Errc::kInvalidArgument, fmt::format("r = {} must be at least 2", r));
  if (c < 1) throw Error(Errc::kInvalidArgument, fmt::format("c = {} must be at least 1", c));
}

void require_p_above_c(int c, std::uint32_t p) {
  if (static_cast<std::int64_t>(p) <= c) throw Error(Errc::kClassTooLarge, fmt::format("class {} is not below p = {}", c, p));
}

std::string letter(int r, std::size_t g) {
  if (r == 2) return g == 0 ? "y" : "x";
  if (r <= 26) return std::string(1, static_cast<char>('a' + g));
  return fmt::format("e{}", g + 1);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::kInvalidArgument, "collection coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::kInvalidArgument, "collection coefficient overflow");
  return r;
}

void accumulate(std::map<std::size_t, std::int64_t>& acc, const Combination& x, std::int64_t scale) {
  for (const auto& [i, c] : x) acc[i] = checked_add(acc[i], checked_mul(c, scale));
}

Combination to_combination(const std::map<std::size_t, std::int64_t>& acc) {
  Combination out;
  for (const auto& [i, c] : acc) {
    if (c != 0) out.emplace_back(i, c);
  }
  return out;
}

}  // namespace

std::int64_t witt(int r, int i) {
  if (r < 1 || i < 1) throw Error(Errc::kInvalidArgument, "witt needs r, i >= 1");
  mpz_class sum = 0;
  for (int d = 1; d <= i; ++d) {
    if (i % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    sum += mu * pow_mpz(static_cast<std::uint64_t>(r), static_cast<unsigned long>(i / d));
  }
  if (sum % i != 0) throw Error(Errc::kInexactDivision, "Witt sum not divisible");
  sum /= i;
  if (!sum.fits_slong_p()) throw Error(Errc::kInvalidArgument, "Witt number overflows");
  return sum.get_si();
}

std::int64_t n_bound(int r, int c) {
  require_rc(r, c);
  std::int64_t n = 0;
  if (c % 2 == 1) {
    for (int i = 1; i <= c / 2; ++i) n += witt(r, i);
  } else {
    const int m = c / 2;
    for (int i = 1; i <= m - 1; ++i) n += witt(r, i);
    n += witt(r, m) / 2;
  }
  return n;
}

std::int64_t k_exponent(int r, int c, int i) {
  require_rc(r, c);
  if (i < 1 || i > c) throw Error(Errc::kInvalidArgument, fmt::format("i = {} outside [1, {}]", i, c));
  std::int64_t k = (2 * i < c + 1) ? -1 : 0;
  for (int l = 1; l <= c - i; ++l) k += witt(r, l);
  return k;
}

std::int64_t N_exponent(int r, int c) {
  require_rc(r, c);
  std::int64_t s = 0;
  for (int i = 1; i <= c; ++i) s += witt(r, i);
  return s - 2 * n_bound(r, c);
}

HallBasis::HallBasis(int r, int c) : r_(r), c_(c) {
  require_rc(r, c);
  layers_.resize(c);
  for (int g = 0; g < r; ++g) {
    BasicCommutator b;
    b.index = elements_.size();
    b.weight = 1;
    b.display = letter(r, g);
    layers_[0].push_back(b.index);
    elements_.push_back(std::move(b));
  }
  for (int w = 2; w <= c; ++w) {
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t u = 0; u < elements_.size(); ++u) {
      for (std::size_t v = 0; v < u; ++v) {
        if (elements_[u].weight + elements_[v].weight != w) continue;
        if (elements_[u].parents && elements_[u].parents->second > v) continue;
        candidates.emplace_back(u, v);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [u, v] : candidates) {
      BasicCommutator b;
      b.index = elements_.size();
      b.weight = w;
      b.parents = std::make_pair(u, v);
      if (!elements_[v].parents) {
        b.display = elements_[u].display + elements_[v].display;
      } else {
        b.display = "(" + elements_[u].display + ")(" + elements_[v].display + ")";
      }
      by_parents_[{u, v}] = b.index;
      layers_[w - 1].push_back(b.index);
      elements_.push_back(std::move(b));
    }
  }
}

std::optional<std::size_t> HallBasis::index_of(std::size_t left, std::size_t right) const {
  auto it = by_parents_.find({left, right});
  if (it == by_parents_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> HallBasis::find(const std::string& display) const {
  for (const auto& e : elements_) {
    if (e.display == display) return e.index;
  }
  return std::nullopt;
}

HallBasis hall_basis(int r, int c) { return HallBasis(r, c); }

const Combination& Collector::collect(std::size_t u, std::size_t v) {
  auto key = std::make_pair(u, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const HallBasis& hb = *basis_;
  Combination result;
  if (u == v || hb[u].weight + hb[v].weight > hb.c()) {
    // zero
  } else if (u < v) {
    result = collect(v, u);
    for (auto& [i, c] : result) c = -c;
  } else if (!hb[u].parents || hb[u].parents->second <= v) {
    auto idx = hb.index_of(u, v);
    if (!idx) throw Error(Errc::kInvalidArgument, fmt::format("missing basic commutator ({}, {})", u, v));
    result = {{*idx, 1}};
  } else {
    // [[u1, u2], v] = [[u1, v], u2] + [u1, [u2, v]]
    const auto [u1, u2] = *hb[u].parents;
    std::map<std::size_t, std::int64_t> acc;
    Combination first = collect(u1, v);
    for (const auto& [w, c] : first) accumulate(acc, Combination(collect(w, u2)), c);
    Combination second = collect(u2, v);
    for (const auto& [w, c] : second) accumulate(acc, Combination(collect(u1, w)), c);
    result = to_combination(acc);
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

Combination Collector::bracket(const Combination& x, const Combination& y) {
  std::map<std::size_t, std::int64_t> acc;
  for (const auto& [u, a] : x) {
    for (const auto& [v, b] : y) accumulate(acc, Combination(collect(u, v)), checked_mul(a, b));
  }
  return to_combination(acc);
}

Combination collect(std::size_t u, std::size_t v, const HallBasis& basis) {
  Collector col(basis);
  return col.collect(u, v);
}

std::string free_table_name(int r, int c) { return fmt::format("free-r{}-c{}", r, c); }

lie::Table free_table_unchecked(int r, int c, const CoefficientRing& ring) {
  HallBasis hb(r, c);
  Collector col(hb);
  lie::Table t(free_table_name(r, c), ring, hb.size());
  const Ring& R = t.ring();
  for (std::size_t i = 0; i < hb.size(); ++i) {
    for (std::size_t j = i + 1; j < hb.size(); ++j) {
      if (hb[i].weight + hb[j].weight > c) continue;
      std::vector<lie::Term> terms;
      for (const auto& [k, coeff] : col.collect(i, j)) terms.push_back({static_cast<std::uint32_t>(k), R.from_int(coeff)});
      if (!terms.empty()) t.set_bracket(i, j, std::move(terms));
    }
  }
  return t;
}

lie::Table free_table(int r, int c, const CoefficientRing& ring) {
  require_p_above_c(c, ring.p());
  return free_table_unchecked(r, c, ring);
}

CountVector class_vector_closed(int r, int c, std::uint32_t p, std::uint32_t f) {
  require_rc(r, c);
  require_p_above_c(c, p);
  const std::uint64_t q = gf::FieldSpec{p, f, {}}.order();
  std::vector<std::int64_t> W(c + 1, 0);
  for (int i = 1; i <= c; ++i) W[i] = witt(r, i);
  CountVector cc(p);
  cc.add(0, pow_mpz(q, W[c]));
  for (int i = 1; i <= c - 1; ++i) {
    const std::int64_t j = k_exponent(r, c, i);
    std::int64_t e = -j;
    for (int l = i + 1; l <= c; ++l) e += W[l];
    mpz_class term = pow_mpz(q, W[i]) - 1;
    if (e >= 0) {
      term *= pow_mpz(q, e);
    } else {
      mpz_class d = pow_mpz(q, -e);
      if (term % d != 0) throw Error(Errc::kInexactDivision, "class vector closed form");
      term /= d;
    }
    cc.add(static_cast<int>(j * f), term);
  }
  cc.prune();
  return cc;
}

std::set<int> char_degrees_closed(int r, int c) {
  if (r == 2 && c == 3) throw Error(Errc::kExceptionalCase, "(2,3) is served by the fixture table");
  std::set<int> out;
  for (int i = 0; i <= n_bound(r, c); ++i) out.insert(i);
  return out;
}

CountVector nu_class2(int r, std::uint32_t p, std::uint32_t f) {
  require_rc(r, 2);
  const std::uint64_t q = gf::FieldSpec{p, f, {}}.order();
  CountVector nu(q);
  for (int i = 0; 2 * i <= r; ++i) {
    mpz_class num = pow_mpz(q, static_cast<unsigned long>(i * (i - 1)));
    for (int j = 0; j <= 2 * i - 1; ++j) num *= pow_mpz(q, r - j) - 1;
    mpz_class den = 1;
    for (int j = 0; j <= i - 1; ++j) den *= pow_mpz(q, 2 * (i - j)) - 1;
    if (num % den != 0) throw Error(Errc::kInexactDivision, "Carlitz–Hodges count");
    nu.add(i, num / den);
  }
  return nu;
}

CountVector char_vector_class2(int r, std::uint32_t p, std::uint32_t f) {
  require_p_above_c(2, p);
  const std::uint64_t q = gf::FieldSpec{p, f, {}}.order();
  CountVector nu = nu_class2(r, p, f);
  CountVector ch(p);
  for (const auto& [i, n] : nu.entries) {
    // ch_{if} = nu_i q^{r - 2i}
    ch.add(static_cast<int>(i * f), n * pow_mpz(q, r - 2 * i));
  }
  return ch;
}

mpz_class char_count_degree_q(int r, int c, std::uint32_t p, std::uint32_t f) {
  if (c <= 2) throw Error(Errc::kInvalidArgument, "degree-q count needs c > 2");
  require_p_above_c(c, p);
  const std::uint64_t q = gf::FieldSpec{p, f, {}}.order();
  const unsigned long e = static_cast<unsigned long>((r - 1) * (c - 1));
  mpz_class num = pow_mpz(q, r - 2) * (pow_mpz(q, r) - 1) * (pow_mpz(q, e + 1) + pow_mpz(q, e) - pow_mpz(q, r) - 1);
  mpz_class den = pow_mpz(q, 2) - 1;
  if (num % den != 0) throw Error(Errc::kInexactDivision, "degree-q count");
  return num / den;
}

std::map<int, QPolynomial> fixture_char_polynomials(int r, int c) {
  using P = QPolynomial;
  auto mono = [](int d, long coeff = 1) {
    std::vector<long> v(d + 1, 0);
    v[d] = coeff;
    return P::from_ints(v);
  };
  // Constant term first.
  if (r == 2 && c == 3) {
    return {{0, mono(2)}, {1, P::from_ints({-1, 0, 0, 1})}};
  }
  if (r == 3 && c == 3) {
    P q3m1 = P::from_ints({-1, 0, 0, 1});
    return {
        {0, mono(3)},
        {1, mono(1) * q3m1 * P::from_ints({1, 0, 1, 1})},
        {2, mono(1) * q3m1 * P::from_ints({-1, 0, 0, 0, 1, 1})},
        {3, mono(4) * P::from_ints({-1, 1}) * P::from_ints({-1, -1, 0, 1})},
    };
  }
  if (r == 2 && c == 4) {
    return {{0, mono(2)}, {1, P::from_ints({-1, 0, -1, 1, 1})}, {2, P::from_ints({1, -1, -1, 0, 1})}};
  }
  if (r == 2 && c == 5) {
    P qm1 = P::from_ints({-1, 1});
    return {
        {0, mono(2)},
        {1, qm1 * P::from_ints({1, 1, 2, 2, 1})},
        {2, qm1 * P::from_ints({-1, -1, 0, 1, 2, 3, 2, 1})},
        {3, mono(2) * P::from_ints({-1, 0, 1}) * P::from_ints({-1, -1, 0, 0, 1})},
    };
  }
  throw Error(Errc::kUnknownFixture, fmt::format("no fixture for (r, c) = ({}, {})", r, c));
}

FixtureVectors fixture_vectors(int r, int c, std::uint32_t p, std::uint32_t f) {
  auto polys = fixture_char_polynomials(r, c);
  require_p_above_c(c, p);
  const std::uint64_t q = gf::FieldSpec{p, f, {}}.order();
  FixtureVectors out{class_vector_closed(r, c, p, f), CountVector(p)};
  for (const auto& [i, poly] : polys) {
    mpq_class v = poly(mpq_class(static_cast<unsigned long>(q)));
    out.ch.add(static_cast<int>(i * f), v.get_num());
  }
  return out;
}

}  // namespace pgc::freenil
