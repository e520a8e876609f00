#include "pgc/count_vector.hpp"

#include <fmt/format.h>

namespace pgc {

void CountVector::add(int exponent, const mpz_class& count) { entries[exponent] += count; }

mpz_class CountVector::total() const {
  mpz_class s = 0;
  for (const auto& [i, n] : entries) s += n;
  return s;
}

mpz_class CountVector::weighted(int scale) const {
  mpz_class s = 0;
  for (const auto& [i, n] : entries) s += n * pow_mpz(base, static_cast<unsigned long>(scale * i));
  return s;
}

mpz_class CountVector::at(int exponent) const {
  auto it = entries.find(exponent);
  return it == entries.end() ? mpz_class(0) : it->second;
}

void CountVector::prune() {
  for (auto it = entries.begin(); it != entries.end();) {
    it = it->second == 0 ? entries.erase(it) : std::next(it);
  }
}

std::string CountVector::format() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, n] : entries) {
    if (n == 0) continue;
    out += fmt::format("{}{} -> {}", first ? "" : ", ", i, n.get_str());
    first = false;
  }
  return out + "}";
}

bool CountVector::operator==(const CountVector& o) const {
  CountVector a = *this, b = o;
  a.prune();
  b.prune();
  return a.base == b.base && a.entries == b.entries;
}

mpz_class pow_mpz(std::uint64_t base, unsigned long exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

}  // namespace pgc
