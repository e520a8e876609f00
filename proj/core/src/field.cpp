#include "pgc/field.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "pgc/error.hpp"

namespace pgc::gf {
namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = m, new_r = a % m;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(Errc::kDivisionByZero, fmt::format("{} is not invertible mod {}", a, m));
  if (t < 0) t += m;
  return static_cast<std::uint32_t>(t);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      std::uint64_t sub = factor * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (n > 0) {
    if (n & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    n >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool has_root(const Poly& g, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = g.size(); i-- > 0;) v = (v * x + g[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

Poly index_to_poly(Elem a, std::uint32_t p, std::uint32_t f) {
  Poly r(f, 0);
  for (std::uint32_t k = 0; k < f; ++k) {
    r[k] = a % p;
    a /= p;
  }
  return r;
}

Elem poly_to_index(const Poly& a, std::uint32_t p) {
  Elem r = 0;
  for (std::size_t k = a.size(); k-- > 0;) r = r * p + a[k];
  return r;
}

}  // namespace

std::uint64_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) q *= p;
  return q;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const Poly& monic, std::uint32_t p) {
  const std::size_t f = monic.size() - 1;
  if (f == 0) return false;
  if (f == 1) return true;
  if (f <= 3) return !has_root(monic, p);
  // Ben-Or: no factor of degree i <= f/2 divides x^{p^i} - x.
  Poly x{0, 1};
  Poly power = x;
  for (std::size_t i = 1; i <= f / 2; ++i) {
    power = poly_powmod(power, p, monic, p);
    Poly diff = power;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(monic, diff, p).size() > 1) return false;
  }
  return true;
}

FieldSpec make_field(std::uint64_t p, std::uint64_t f) {
  if (!is_prime(p) || p > 0xffffffffULL) throw Error(Errc::kNotPrime, fmt::format("{} is not a prime", p));
  if (f < 1) throw Error(Errc::kInvalidArgument, "extension degree must be at least 1");
  FieldSpec spec;
  spec.p = static_cast<std::uint32_t>(p);
  spec.f = static_cast<std::uint32_t>(f);
  if (f == 1) return spec;
  if (spec.order() > kMaxTableOrder || spec.order() / p > kMaxTableOrder) {
    throw Error(Errc::kInvalidArgument, fmt::format("GF({}^{}) exceeds the supported field size", p, f));
  }
  // Tuples (a_{f-1}, ..., a_0) in lexicographic order are the base-p integers with
  // a_{f-1} as the leading digit.
  const std::uint64_t count = spec.order();
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly g = index_to_poly(static_cast<Elem>(n), spec.p, spec.f);
    g.push_back(1);
    if (is_irreducible(g, spec.p)) {
      g.pop_back();
      spec.modulus = g;
      return spec;
    }
  }
  throw Error(Errc::kInvalidArgument, "no irreducible polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw Error(Errc::kNotPrime, fmt::format("{} is not a prime", spec_.p));
  if (spec_.f == 1) {
    q_ = spec_.p;
    return;
  }
  if (spec_.modulus.size() != spec_.f) throw Error(Errc::kInvalidArgument, "modulus length differs from degree");
  if (spec_.order() > kMaxTableOrder) throw Error(Errc::kInvalidArgument, "field too large for table arithmetic");
  q_ = static_cast<std::uint32_t>(spec_.order());
  Poly m = spec_.modulus;
  m.push_back(1);
  if (!is_irreducible(m, spec_.p)) throw Error(Errc::kInvalidArgument, "modulus is reducible");

  neg_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Poly c = index_to_poly(a, spec_.p, spec_.f);
    for (auto& x : c) x = (spec_.p - x) % spec_.p;
    neg_table_[a] = poly_to_index(c, spec_.p);
  }

  // Find a primitive element by walking powers; the first generator found wins.
  const std::uint32_t n = q_ - 1;
  exp_.assign(2 * std::size_t{n}, 0);
  log_.assign(q_, 0);
  for (Elem g = 2; g < q_; ++g) {
    Poly gp = index_to_poly(g, spec_.p, spec_.f);
    Poly cur{1};
    std::uint32_t k = 0;
    bool primitive = true;
    for (; k < n; ++k) {
      Elem idx = poly_to_index(cur, spec_.p);
      if (k > 0 && idx == 1) {
        primitive = false;
        break;
      }
      exp_[k] = idx;
      cur = poly_mulmod(cur, gp, m, spec_.p);
      cur.resize(spec_.f, 0);
    }
    if (primitive) break;
  }
  for (std::uint32_t k = 0; k < n; ++k) {
    exp_[k + n] = exp_[k];
    log_[exp_[k]] = k;
  }
}

Elem Field::add_digits(Elem a, Elem b) const {
  Elem r = 0;
  Elem scale = 1;
  const std::uint32_t p = spec_.p;
  for (std::uint32_t k = 0; k < spec_.f; ++k) {
    std::uint32_t d = a % p + b % p;
    if (d >= p) d -= p;
    r += d * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::kDivisionByZero, "inverse of zero");
  if (spec_.f == 1) return inv_mod(a, q_);
  const std::uint32_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  Elem result = 1;
  while (n > 0) {
    if (n & 1) result = mul(result, a);
    a = mul(a, a);
    n >>= 1;
  }
  return result;
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(spec_.p);
  if (r < 0) r += spec_.p;
  return static_cast<Elem>(r);
}

Elem Field::from_element(const FieldElement& e) const {
  if (e.coords.size() != spec_.f) throw Error(Errc::kDimensionMismatch, "coordinate count differs from degree");
  Elem r = 0;
  for (std::size_t k = e.coords.size(); k-- > 0;) {
    if (e.coords[k] >= spec_.p) throw Error(Errc::kInvalidArgument, "coordinate not reduced");
    r = r * spec_.p + e.coords[k];
  }
  return r;
}

FieldElement Field::to_element(Elem a) const {
  return FieldElement{index_to_poly(a, spec_.p, spec_.f)};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (Elem a = 0; a < q_; ++a) out[a] = a;
  return out;
}

std::string Field::format(Elem a) const {
  if (spec_.f == 1) return fmt::format("{}", a);
  return fmt::format("({})", fmt::join(to_element(a).coords, ","));
}

std::vector<Elem> enumerate_field(const Field& field) { return field.elements(); }

}  // namespace pgc::gf
