#include "pgc/liecore.hpp"

#include <algorithm>
#include <array>
#include <set>

#include <fmt/format.h>

#include "pgc/error.hpp"

namespace pgc::lie {
namespace {

std::vector<Term> normalize_terms(const Ring& ring, std::vector<Term> terms) {
  std::map<std::uint32_t, Elem> acc;
  for (const auto& t : terms) acc[t.k] = ring.add(acc[t.k], t.c);
  std::vector<Term> out;
  for (const auto& [k, c] : acc) {
    if (c != 0) out.push_back({k, c});
  }
  return out;
}

std::vector<Term> negate_terms(const Ring& ring, std::vector<Term> terms) {
  for (auto& t : terms) t.c = ring.neg(t.c);
  return terms;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Vec unit_vector(std::size_t h, std::size_t i) {
  Vec v(h, 0);
  v[i] = 1;
  return v;
}

}  // namespace

StructureConstantTable::StructureConstantTable(std::string name, const CoefficientRing& ring, std::size_t h)
    : StructureConstantTable(std::move(name), make_ring(ring), h) {}

StructureConstantTable::StructureConstantTable(std::string name, RingPtr ring, std::size_t h)
    : name_(std::move(name)), ring_(std::move(ring)), h_(h), dense_(h * h) {}

void StructureConstantTable::set_bracket(std::size_t i, std::size_t j, std::vector<Term> terms) {
  if (i >= h_ || j >= h_) throw Error(Errc::kInvalidArgument, fmt::format("bracket index out of range ({}, {})", i + 1, j + 1));
  for (const auto& t : terms) {
    if (t.k >= h_) throw Error(Errc::kInvalidArgument, fmt::format("basis index {} out of range", t.k + 1));
  }
  terms = normalize_terms(*ring_, std::move(terms));
  if (i == j) {
    if (!terms.empty()) throw Error(Errc::kAntisymmetryViolation, fmt::format("({},{},{})", i + 1, i + 1, terms[0].k + 1));
    return;
  }
  if (i > j) {
    std::swap(i, j);
    terms = negate_terms(*ring_, std::move(terms));
  }
  auto key = std::make_pair(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  if (terms.empty()) {
    entries_.erase(key);
  } else {
    entries_[key] = terms;
  }
  dense_[j * h_ + i] = negate_terms(*ring_, terms);
  dense_[i * h_ + j] = std::move(terms);
}

Vec StructureConstantTable::bracket(const Vec& x, const Vec& y) const {
  const Ring& ring = *ring_;
  Vec out(h_, 0);
  for (const auto& [ij, terms] : entries_) {
    Elem xi = x[ij.first], xj = x[ij.second], yi = y[ij.first], yj = y[ij.second];
    if ((xi == 0 || yj == 0) && (xj == 0 || yi == 0)) continue;
    Elem s = ring.sub(ring.mul(xi, yj), ring.mul(xj, yi));
    if (s == 0) continue;
    for (const auto& t : terms) out[t.k] = ring.add(out[t.k], ring.mul(s, t.c));
  }
  return out;
}

Mat StructureConstantTable::ad_matrix(const Vec& x) const {
  const Ring& ring = *ring_;
  Mat m(h_, h_);
  for (std::size_t i = 0; i < h_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < h_; ++j) {
      // [e_j, x] = sum_i x_i [e_j, e_i]
      for (const auto& t : dense_[j * h_ + i]) m(t.k, j) = ring.add(m(t.k, j), ring.mul(x[i], t.c));
    }
  }
  return m;
}

TableBuilder::TableBuilder(std::string name, const CoefficientRing& ring, std::size_t h)
    : name_(std::move(name)), ring_(make_ring(ring)), h_(h) {}

TableBuilder& TableBuilder::add(std::size_t i, std::size_t j, std::size_t k, std::int64_t coeff) {
  return add_elem(i, j, k, ring_->from_int(coeff));
}

TableBuilder& TableBuilder::add_elem(std::size_t i, std::size_t j, std::size_t k, Elem coeff) {
  if (i >= h_ || j >= h_ || k >= h_) {
    throw Error(Errc::kInvalidArgument, fmt::format("index out of range in ({},{},{})", i + 1, j + 1, k + 1));
  }
  auto key = std::make_tuple(i, j, k);
  raw_[key] = ring_->add(raw_[key], coeff);
  return *this;
}

Table TableBuilder::build() const {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Elem> canon;
  for (const auto& [key, c] : raw_) {
    auto [i, j, k] = key;
    if (c == 0) continue;
    if (i == j) throw Error(Errc::kAntisymmetryViolation, fmt::format("({},{},{})", i + 1, j + 1, k + 1));
    if (i > j) continue;
    canon[key] = c;
  }
  for (const auto& [key, c] : raw_) {
    auto [i, j, k] = key;
    if (i <= j || c == 0) continue;
    auto mirror = std::make_tuple(j, i, k);
    Elem expected = ring_->neg(c);
    auto it = raw_.find(mirror);
    if (it != raw_.end() && it->second != expected) {
      throw Error(Errc::kAntisymmetryViolation, fmt::format("({},{},{})", j + 1, i + 1, k + 1));
    }
    canon[mirror] = expected;
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> grouped;
  for (const auto& [key, c] : canon) {
    auto [i, j, k] = key;
    grouped[{i, j}].push_back({static_cast<std::uint32_t>(k), c});
  }
  Table t(name_, ring_, h_);
  for (auto& [ij, terms] : grouped) t.set_bracket(ij.first, ij.second, std::move(terms));
  return t;
}

SubspaceBasis span(const Ring& ring, const std::vector<Vec>& vectors, std::size_t dim) {
  SubspaceBasis out;
  if (ring.is_field()) {
    linalg::Echelon e(ring.field(), dim);
    for (const auto& v : vectors) e.insert(v);
    out.vectors = e.basis();
    out.valuations.assign(out.vectors.size(), 0);
    out.log_order = static_cast<std::uint32_t>(out.vectors.size()) * ring.residue_degree();
    return out;
  }
  Mat m(dim, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = vectors[c][r];
  }
  linalg::Span s = linalg::column_span(ring, m);
  out.vectors = std::move(s.generators);
  out.valuations = std::move(s.valuations);
  out.log_order = s.log_order;
  return out;
}

namespace {

// [v, e_j] for all j, as the columns of a list.
std::vector<Vec> brackets_with_basis(const Table& table, const Vec& v) {
  const Ring& ring = table.ring();
  const std::size_t h = table.dim();
  std::vector<Vec> out(h, Vec(h, 0));
  for (std::size_t k = 0; k < h; ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < h; ++j) {
      for (const auto& t : table.bracket_terms(k, j)) out[j][t.k] = ring.add(out[j][t.k], ring.mul(v[k], t.c));
    }
  }
  return out;
}

}  // namespace

LowerCentralSeries lower_central_series(const Table& table) {
  const Ring& ring = table.ring();
  const std::size_t h = table.dim();
  LowerCentralSeries out;
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < h; ++i) basis.push_back(unit_vector(h, i));
  out.terms.push_back(span(ring, basis, h));
  while (out.terms.back().log_order > 0) {
    std::vector<Vec> gens;
    for (const auto& v : out.terms.back().vectors) {
      for (auto& w : brackets_with_basis(table, v)) {
        if (!is_zero(w)) gens.push_back(std::move(w));
      }
    }
    SubspaceBasis next = span(ring, gens, h);
    if (next.log_order == out.terms.back().log_order) {
      throw Error(Errc::kNotNilpotent, fmt::format("lower central series stabilizes at order p^{}", next.log_order));
    }
    out.terms.push_back(std::move(next));
  }
  out.nilpotency_class = out.terms.size() - 1;
  return out;
}

std::size_t nilpotency_class(const Table& table) { return lower_central_series(table).nilpotency_class; }

Mat centre_equations(const Table& table) {
  const std::size_t h = table.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < h; ++i) {
    std::map<std::uint32_t, Vec> by_k;
    for (std::size_t j = 0; j < h; ++j) {
      for (const auto& t : table.bracket_terms(i, j)) {
        auto [it, inserted] = by_k.try_emplace(t.k, Vec(h, 0));
        it->second[j] = t.c;
      }
    }
    for (auto& [k, row] : by_k) rows.push_back(std::move(row));
  }
  return Mat::from_rows(rows, h);
}

SubspaceBasis centre(const Table& table) {
  const Ring& ring = table.ring();
  const std::size_t h = table.dim();
  Mat m = centre_equations(table);
  std::vector<Vec> gens;
  if (ring.is_field()) {
    gens = linalg::nullspace(ring.field(), m);
  } else {
    linalg::Smith s = linalg::smith_form(ring, m, true);
    for (std::size_t k = 0; k < h; ++k) {
      std::uint32_t v = k < s.valuations.size() ? s.valuations[k] : ring.length();
      Vec g = s.Q.col(k);
      if (v < ring.length()) {
        Elem scale = ring.uniformizer_power(ring.length() - v);
        for (auto& x : g) x = ring.mul(x, scale);
      }
      if (!is_zero(g)) gens.push_back(std::move(g));
    }
  }
  return span(ring, gens, h);
}

SubspaceBasis derived(const Table& table) {
  const std::size_t h = table.dim();
  std::vector<Vec> gens;
  for (const auto& [ij, terms] : table.entries()) {
    Vec v(h, 0);
    for (const auto& t : terms) v[t.k] = t.c;
    gens.push_back(std::move(v));
  }
  return span(table.ring(), gens, h);
}

void check_jacobi(const Table& table) {
  const Ring& ring = table.ring();
  const std::size_t h = table.dim();
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
  for (const auto& [ij, terms] : table.entries()) {
    for (std::size_t l = 0; l < h; ++l) {
      if (l == ij.first || l == ij.second) continue;
      std::array<std::size_t, 3> t{ij.first, ij.second, l};
      std::sort(t.begin(), t.end());
      triples.emplace(t[0], t[1], t[2]);
    }
  }
  Vec acc(h, 0);
  auto add_double = [&](std::size_t a, std::size_t b, std::size_t c) {
    // [[e_a, e_b], e_c]
    for (const auto& s : table.bracket_terms(a, b)) {
      for (const auto& t : table.bracket_terms(s.k, c)) acc[t.k] = ring.add(acc[t.k], ring.mul(s.c, t.c));
    }
  };
  for (const auto& [i, j, l] : triples) {
    std::fill(acc.begin(), acc.end(), 0);
    add_double(i, j, l);
    add_double(j, l, i);
    add_double(l, i, j);
    if (!is_zero(acc)) throw Error(Errc::kJacobiViolation, fmt::format("({},{},{})", i + 1, j + 1, l + 1));
  }
}

void validate(const Table& table) {
  check_jacobi(table);
  lower_central_series(table);
}

bool is_adapted(const Table& table, std::size_t a, std::size_t b) {
  const Ring& ring = table.ring();
  if (!ring.is_field()) throw Error(Errc::kUnsupportedRing, "adapted bases are defined over fields only");
  const std::size_t h = table.dim();
  SubspaceBasis z = centre(table);
  SubspaceBasis d = derived(table);
  if (z.size() + a != h || d.size() != b) return false;
  linalg::Echelon ez(ring.field(), h);
  for (const auto& v : z.vectors) ez.insert(v);
  for (std::size_t i = 0; i < a; ++i) {
    if (!ez.insert(unit_vector(h, i))) return false;
  }
  linalg::Echelon ed(ring.field(), h);
  for (const auto& v : d.vectors) ed.insert(v);
  for (std::size_t i = h - b; i < h; ++i) {
    if (!ed.contains(unit_vector(h, i))) return false;
  }
  return true;
}

AdaptedBasis adapt_basis(const Table& table) {
  const Ring& ring = table.ring();
  if (!ring.is_field()) throw Error(Errc::kUnsupportedRing, "adapt_basis requires a field coefficient ring");
  const gf::Field& field = ring.field();
  const std::size_t h = table.dim();
  SubspaceBasis z = centre(table);
  SubspaceBasis d = derived(table);
  const std::size_t zdim = z.size();
  const std::size_t b = d.size();
  const std::size_t a = h - zdim;

  AdaptedBasis out{Mat::identity(h), a, b, table};
  if (is_adapted(table, a, b)) return out;

  // g' ∩ z from the kernel of [d_1 .. d_b | -z_1 .. -z_zdim].
  Mat stack(h, b + zdim);
  for (std::size_t c = 0; c < b; ++c) {
    for (std::size_t r = 0; r < h; ++r) stack(r, c) = d.vectors[c][r];
  }
  for (std::size_t c = 0; c < zdim; ++c) {
    for (std::size_t r = 0; r < h; ++r) stack(r, b + c) = field.neg(z.vectors[c][r]);
  }
  linalg::Echelon meet(field, h);
  for (const auto& kv : linalg::nullspace(field, stack)) {
    Vec w(h, 0);
    for (std::size_t c = 0; c < b; ++c) {
      for (std::size_t r = 0; r < h; ++r) w[r] = field.add(w[r], field.mul(kv[c], d.vectors[c][r]));
    }
    meet.insert(std::move(w));
  }
  std::vector<Vec> meet_basis = meet.basis();

  // F: derived vectors with independent residues mod z, then g' ∩ z.
  std::vector<Vec> f_top;
  linalg::Echelon mod_z(field, h);
  for (const auto& v : z.vectors) mod_z.insert(v);
  for (const auto& v : d.vectors) {
    if (mod_z.insert(v)) f_top.push_back(v);
  }
  std::vector<Vec> f_all = f_top;
  f_all.insert(f_all.end(), meet_basis.begin(), meet_basis.end());

  // Z': complement of g' ∩ z inside z.
  std::vector<Vec> z_rest;
  linalg::Echelon in_z(field, h);
  for (const auto& v : meet_basis) in_z.insert(v);
  for (const auto& v : z.vectors) {
    if (in_z.insert(v)) z_rest.push_back(v);
  }

  // C: complement of g' + z in g, from standard basis vectors.
  std::vector<Vec> comp;
  linalg::Echelon sum(field, h);
  for (const auto& v : z.vectors) sum.insert(v);
  for (const auto& v : d.vectors) sum.insert(v);
  for (std::size_t i = 0; i < h; ++i) {
    Vec e = unit_vector(h, i);
    if (sum.insert(e)) comp.push_back(std::move(e));
  }

  const std::size_t o = b > zdim ? b - zdim : 0;
  std::vector<Vec> rows = comp;
  for (std::size_t k = 0; k < z_rest.size(); ++k) {
    Vec v = z_rest[k];
    if (k + o < f_top.size()) {
      for (std::size_t r = 0; r < h; ++r) v[r] = field.add(v[r], f_all[o + k][r]);
    }
    rows.push_back(std::move(v));
  }
  rows.insert(rows.end(), f_all.begin(), f_all.end());
  if (rows.size() != h) throw Error(Errc::kNotAdapted, "adapted basis construction lost dimension");

  out.change_of_basis = Mat::from_rows(rows, h);
  out.table = change_basis(table, out.change_of_basis);
  if (!is_adapted(out.table, a, b)) throw Error(Errc::kNotAdapted, "adapted basis construction failed its window check");
  return out;
}

Table change_basis(const Table& table, const Mat& new_basis) {
  const Ring& ring = table.ring();
  const std::size_t h = table.dim();
  if (new_basis.rows != h || new_basis.cols != h) throw Error(Errc::kDimensionMismatch, "change of basis shape");
  Mat inv = linalg::inverse(ring, new_basis);
  Table out(table.name(), table.ring_ptr(), h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i + 1; j < h; ++j) {
      Vec w = table.bracket(new_basis.row(i), new_basis.row(j));
      if (is_zero(w)) continue;
      Vec coords = linalg::apply_left(ring, w, inv);
      std::vector<Term> terms;
      for (std::size_t k = 0; k < h; ++k) {
        if (coords[k] != 0) terms.push_back({static_cast<std::uint32_t>(k), coords[k]});
      }
      out.set_bracket(i, j, std::move(terms));
    }
  }
  return out;
}

Table base_change(const Table& table, std::uint32_t m) {
  const Ring& ring = table.ring();
  if (!ring.is_field()) throw Error(Errc::kUnsupportedRing, "base_change requires a field coefficient ring");
  if (m < 1) throw Error(Errc::kInvalidArgument, "extension degree must be positive");
  if (m == 1) return table;
  const gf::FieldSpec& small = ring.field().spec();
  CoefficientRing big_spec = CoefficientRing::field(gf::make_field(small.p, std::uint64_t{small.f} * m));
  RingPtr big = make_ring(big_spec);
  const gf::Field& bf = big->field();

  // Image of the small field's generator: least root of its modulus in the big field.
  Elem beta = 0;
  if (small.f > 1) {
    bool found = false;
    for (Elem t = 0; t < bf.order() && !found; ++t) {
      Elem v = 1;
      for (std::size_t k = small.f; k-- > 0;) v = bf.add(bf.mul(v, t), small.modulus[k]);
      if (v == 0) {
        beta = t;
        found = true;
      }
    }
    if (!found) throw Error(Errc::kInvalidArgument, "no embedding of the coefficient field");
  }
  auto embed = [&](Elem x) -> Elem {
    if (small.f == 1) return x;
    gf::FieldElement c = ring.field().to_element(x);
    Elem r = 0;
    for (std::size_t k = c.coords.size(); k-- > 0;) r = bf.add(bf.mul(r, beta), c.coords[k]);
    return r;
  };
  Table out(table.name(), big, table.dim());
  for (const auto& [ij, terms] : table.entries()) {
    std::vector<Term> mapped;
    for (const auto& t : terms) mapped.push_back({t.k, embed(t.c)});
    out.set_bracket(ij.first, ij.second, std::move(mapped));
  }
  return out;
}

}  // namespace pgc::lie
