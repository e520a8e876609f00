#include "pgc/ring.hpp"

#include <fmt/format.h>

#include "pgc/error.hpp"

namespace pgc {

CoefficientRing CoefficientRing::field(gf::FieldSpec spec) {
  CoefficientRing r;
  r.kind_ = std::move(spec);
  return r;
}

CoefficientRing CoefficientRing::modular(std::uint32_t p, std::uint32_t e) {
  if (!gf::is_prime(p)) throw Error(Errc::kNotPrime, fmt::format("{} is not a prime", p));
  if (e < 1) throw Error(Errc::kInvalidArgument, "exponent must be at least 1");
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    m *= p;
    if (m > 0xffffffffULL) throw Error(Errc::kInvalidArgument, "modulus p^e exceeds 32 bits");
  }
  CoefficientRing r;
  r.kind_ = ModularSpec{p, e};
  return r;
}

std::uint32_t CoefficientRing::p() const {
  return is_field() ? field_spec().p : modular_spec().p;
}

std::uint32_t CoefficientRing::residue_degree() const { return is_field() ? field_spec().f : 1; }

std::uint32_t CoefficientRing::length() const { return is_field() ? 1 : modular_spec().e; }

std::string CoefficientRing::describe() const {
  if (is_field()) {
    const auto& s = field_spec();
    return s.f == 1 ? fmt::format("p={}", s.p) : fmt::format("p={} f={}", s.p, s.f);
  }
  return fmt::format("p={} e={}", modular_spec().p, modular_spec().e);
}

Ring::Ring(CoefficientRing spec) : spec_(std::move(spec)) {
  if (spec_.is_field()) {
    field_.emplace(spec_.field_spec());
    order_ = field_->order();
  } else {
    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < spec_.modular_spec().e; ++i) m *= spec_.modular_spec().p;
    order_ = static_cast<std::uint32_t>(m);
  }
}

Elem Ring::from_int(std::int64_t n) const {
  if (field_) return field_->from_int(n);
  std::int64_t r = n % static_cast<std::int64_t>(order_);
  if (r < 0) r += order_;
  return static_cast<Elem>(r);
}

Elem Ring::from_mpz(const mpz_class& n) const {
  const std::uint32_t m = field_ ? p() : order_;
  mpz_class r = n % m;
  if (r < 0) r += m;
  return static_cast<Elem>(r.get_ui());
}

Elem Ring::from_rational(const mpq_class& x) const {
  Elem den = from_mpz(x.get_den());
  if (!is_unit(den)) {
    throw Error(Errc::kDenominatorNotInvertible,
                fmt::format("denominator {} is divisible by {}", x.get_den().get_str(), p()));
  }
  return mul(from_mpz(x.get_num()), inv(den));
}

std::uint32_t Ring::valuation(Elem a) const {
  if (a == 0) return length();
  if (field_) return 0;
  std::uint32_t v = 0;
  while (a % p() == 0) {
    a /= p();
    ++v;
  }
  return v;
}

Elem Ring::inv(Elem a) const {
  if (field_) return field_->inv(a);
  if (!is_unit(a)) throw Error(Errc::kDivisionByZero, fmt::format("{} is not a unit mod {}", a, order_));
  std::int64_t t = 0, new_t = 1, r = order_, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += order_;
  return static_cast<Elem>(t);
}

Elem Ring::divide_exact(Elem b, Elem a) const {
  if (b == 0) return 0;
  if (field_) return field_->div(b, a);
  std::uint32_t va = valuation(a);
  if (valuation(b) < va) throw Error(Errc::kInexactDivision, fmt::format("{} / {} mod {}", b, a, order_));
  Elem pk = uniformizer_power(va);
  return mul(b / pk, inv(a / pk));
}

Elem Ring::uniformizer_power(std::uint32_t k) const {
  if (k >= length()) return 0;
  if (field_) return 1;
  Elem r = 1;
  for (std::uint32_t i = 0; i < k; ++i) r *= p();
  return r;
}

std::vector<Elem> Ring::residues(std::uint32_t m) const {
  if (m == 0) return {0};
  std::uint64_t count = 1;
  if (field_) {
    count = order_;
  } else {
    for (std::uint32_t i = 0; i < std::min(m, length()); ++i) count *= p();
  }
  std::vector<Elem> out(count);
  for (std::uint64_t i = 0; i < count; ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::vector<std::uint32_t> Ring::additive_coords(Elem a) const {
  if (!field_) return {a};
  std::vector<std::uint32_t> out(residue_degree());
  for (auto& c : out) {
    c = a % p();
    a /= p();
  }
  return out;
}

Elem Ring::from_additive_coords(const std::vector<std::uint32_t>& coords) const {
  if (!field_) return coords.at(0) % order_;
  Elem r = 0;
  for (std::size_t k = coords.size(); k-- > 0;) r = r * p() + coords[k] % p();
  return r;
}

std::string Ring::format(Elem a) const {
  if (field_) return field_->format(a);
  return fmt::format("{}", a);
}

RingPtr make_ring(const CoefficientRing& spec) { return std::make_shared<const Ring>(spec); }

}  // namespace pgc
