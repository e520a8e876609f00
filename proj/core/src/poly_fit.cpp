#include "pgc/poly_fit.hpp"

#include <set>

#include <fmt/format.h>

#include "pgc/error.hpp"

namespace pgc {

QPolynomial::QPolynomial(std::vector<mpq_class> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

QPolynomial QPolynomial::from_ints(const std::vector<long>& c) {
  std::vector<mpq_class> q;
  for (long x : c) q.emplace_back(x);
  return QPolynomial(std::move(q));
}

mpq_class QPolynomial::operator()(const mpq_class& x) const {
  mpq_class r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
  return r;
}

bool QPolynomial::is_integral() const {
  for (const auto& c : coeffs) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool QPolynomial::has_negative_coefficient() const {
  for (const auto& c : coeffs) {
    if (c < 0) return true;
  }
  return false;
}

std::string QPolynomial::format(const std::string& var) const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const mpq_class& c = coeffs[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    std::string sign = c < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
    std::string mono = i == 0 ? "" : (i == 1 ? var : fmt::format("{}^{}", var, i));
    std::string num = (mag == 1 && i > 0) ? "" : mag.get_str();
    std::string sep = (!num.empty() && !mono.empty()) ? "*" : "";
    out += sign + num + sep + mono;
  }
  return out;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<mpq_class> c(std::max(coeffs.size(), o.coeffs.size()), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<mpq_class> c(std::max(coeffs.size(), o.coeffs.size()), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) c[i] -= o.coeffs[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (coeffs.empty() || o.coeffs.empty()) return {};
  std::vector<mpq_class> c(coeffs.size() + o.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
  }
  return QPolynomial(std::move(c));
}

QPolynomial taylor_shift(const QPolynomial& p, const mpq_class& s) {
  // Horner in the shifted variable: P(v + s) = (...(a_n (v+s) + a_{n-1})(v+s) + ...).
  QPolynomial lin({s, mpq_class(1)});
  QPolynomial r;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) r = r * lin + QPolynomial({p.coeffs[i]});
  return r;
}

PolyFit poly_fit(const std::vector<std::pair<mpz_class, mpz_class>>& samples, bool require_integral) {
  if (samples.empty()) throw Error(Errc::kInvalidArgument, "poly_fit needs at least one sample");
  std::set<mpz_class> seen;
  for (const auto& [x, y] : samples) {
    if (!seen.insert(x).second) throw Error(Errc::kDuplicateNode, fmt::format("node {} repeated", x.get_str()));
  }
  const std::size_t n = samples.size();
  std::vector<mpq_class> xs(n), dd(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = samples[i].first;
    dd[i] = samples[i].second;
  }
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  QPolynomial poly;
  for (std::size_t i = n; i-- > 0;) {
    poly = poly * QPolynomial({mpq_class(-xs[i]), mpq_class(1)}) + QPolynomial({dd[i]});
  }
  PolyFit out{poly, taylor_shift(poly, 1)};
  if (require_integral && !out.poly.is_integral()) {
    throw Error(Errc::kNonIntegralCoefficient, out.poly.format());
  }
  return out;
}

}  // namespace pgc
