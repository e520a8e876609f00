#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pgc {

// Exact rational polynomial, constant term first; no trailing zeros.
struct QPolynomial {
  std::vector<mpq_class> coeffs;

  QPolynomial() = default;
  explicit QPolynomial(std::vector<mpq_class> c);
  static QPolynomial from_ints(const std::vector<long>& c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  mpq_class operator()(const mpq_class& x) const;
  bool is_integral() const;
  bool has_negative_coefficient() const;
  std::string format(const std::string& var = "q") const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  bool operator==(const QPolynomial& o) const { return coeffs == o.coeffs; }
};

// P(v + s) as a polynomial in v.
QPolynomial taylor_shift(const QPolynomial& p, const mpq_class& s);

struct PolyFit {
  QPolynomial poly;     // in q
  QPolynomial shifted;  // in v = q - 1
};

// Newton interpolation through (q, value) samples at distinct nodes.
PolyFit poly_fit(const std::vector<std::pair<mpz_class, mpz_class>>& samples, bool require_integral = false);

}  // namespace pgc
