#pragma once

// Finite fields GF(p^f) with a deterministic modulus.
//
// Elements are stored as integers in [0, q): the coordinate tuple (a_0, ..., a_{f-1})
// in the power basis of the modulus root maps to sum a_k p^k. Numeric order of
// these indices is the enumeration order (0 first, then 1, then t, ...).

#include <cstdint>
#include <string>
#include <vector>

namespace pgc::gf {

using Elem = std::uint32_t;

// Largest q = p^f (f > 1) for which log/exp tables are built.
inline constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 20;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t f = 1;
  // a_0..a_{f-1} of the monic modulus x^f + a_{f-1}x^{f-1} + ... + a_0; empty when f == 1.
  std::vector<std::uint32_t> modulus;

  std::uint64_t order() const;
  bool operator==(const FieldSpec&) const = default;
};

struct FieldElement {
  std::vector<std::uint32_t> coords;  // low degree first, length f
  bool operator==(const FieldElement&) const = default;
};

bool is_prime(std::uint64_t n);

// Low-degree-first polynomial over F_p, monic of degree coeffs.size() - 1.
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

FieldSpec make_field(std::uint64_t p, std::uint64_t f);

class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.f; }
  std::uint32_t order() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    if (spec_.f == 1) {
      std::uint32_t s = a + b;
      return s >= q_ ? s - q_ : s;
    }
    if (spec_.p == 2) return a ^ b;
    return add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (spec_.f == 1) return a == 0 ? 0 : q_ - a;
    return neg_table_[a];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (spec_.f == 1) {
      return static_cast<Elem>(std::uint64_t{a} * b % q_);
    }
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;

  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const;
  Elem from_element(const FieldElement& e) const;
  FieldElement to_element(Elem a) const;

  std::vector<Elem> elements() const;
  // "3" when f == 1, "(a0,a1,...)" otherwise.
  std::string format(Elem a) const;

 private:
  Elem add_digits(Elem a, Elem b) const;

  FieldSpec spec_;
  std::uint32_t q_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_table_;
};

std::vector<Elem> enumerate_field(const Field& field);

}  // namespace pgc::gf
