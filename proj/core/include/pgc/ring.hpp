#pragma once

// Coefficient rings: GF(p^f) or Z/p^e. Both are finite local rings with residue
// characteristic p, and the Ring class exposes the local structure (valuation,
// exact division) so that Smith normal form works uniformly over either.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "pgc/field.hpp"

namespace pgc {

using Elem = std::uint32_t;

struct ModularSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  bool operator==(const ModularSpec&) const = default;
};

class CoefficientRing {
 public:
  static CoefficientRing field(gf::FieldSpec spec);
  static CoefficientRing modular(std::uint32_t p, std::uint32_t e);

  bool is_field() const { return std::holds_alternative<gf::FieldSpec>(kind_); }
  const gf::FieldSpec& field_spec() const { return std::get<gf::FieldSpec>(kind_); }
  const ModularSpec& modular_spec() const { return std::get<ModularSpec>(kind_); }

  std::uint32_t p() const;
  // Extension degree f for fields, 1 for Z/p^e.
  std::uint32_t residue_degree() const;
  // 1 for fields, e for Z/p^e.
  std::uint32_t length() const;
  // log_p |R|
  std::uint32_t log_order() const { return residue_degree() * length(); }
  // "p=5 f=2" or "p=3 e=2" (f=1 is omitted).
  std::string describe() const;

  bool operator==(const CoefficientRing&) const = default;

 private:
  std::variant<gf::FieldSpec, ModularSpec> kind_;
};

class Ring {
 public:
  explicit Ring(CoefficientRing spec);

  const CoefficientRing& spec() const { return spec_; }
  bool is_field() const { return field_.has_value(); }
  const gf::Field& field() const { return *field_; }

  std::uint32_t p() const { return spec_.p(); }
  std::uint32_t length() const { return spec_.length(); }
  std::uint32_t residue_degree() const { return spec_.residue_degree(); }
  // |R|; every element is an integer in [0, order()).
  std::uint32_t order() const { return order_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const {
    if (field_) return field_->add(a, b);
    std::uint32_t s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  Elem neg(Elem a) const {
    if (field_) return field_->neg(a);
    return a == 0 ? 0 : order_ - a;
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (field_) return field_->mul(a, b);
    return static_cast<Elem>(std::uint64_t{a} * b % order_);
  }

  Elem from_int(std::int64_t n) const;
  Elem from_mpz(const mpz_class& n) const;
  // num / den with den a unit of R.
  Elem from_rational(const mpq_class& x) const;

  // p-adic valuation; length() for zero.
  std::uint32_t valuation(Elem a) const;
  bool is_unit(Elem a) const { return a != 0 && valuation(a) == 0; }
  Elem inv(Elem a) const;
  // Some x with a*x = b; requires valuation(b) >= valuation(a).
  Elem divide_exact(Elem b, Elem a) const;
  // p^k (zero once k >= length()).
  Elem uniformizer_power(std::uint32_t k) const;

  // Representatives of R / p^m R (all of R when m >= length()).
  std::vector<Elem> residues(std::uint32_t m) const;
  std::vector<Elem> elements() const { return residues(length()); }

  // Decomposition of (R, +) into cyclic groups of equal order p^additive_exponent():
  // f copies of Z/p for fields, one Z/p^e otherwise.
  std::uint32_t additive_rank() const { return field_ ? residue_degree() : 1; }
  std::uint32_t additive_exponent() const { return field_ ? 1 : length(); }
  std::vector<std::uint32_t> additive_coords(Elem a) const;
  Elem from_additive_coords(const std::vector<std::uint32_t>& coords) const;

  std::string format(Elem a) const;

 private:
  CoefficientRing spec_;
  std::optional<gf::Field> field_;
  std::uint32_t order_ = 0;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(const CoefficientRing& spec);

}  // namespace pgc
