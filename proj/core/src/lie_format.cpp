#include "pgc/lie_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "pgc/error.hpp"

namespace pgc {
namespace {

[[noreturn]] void syntax(std::size_t line, const std::string& msg) {
  throw Error(Errc::kSyntaxError, fmt::format("line {}: {}", line, msg));
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::uint64_t parse_positive(std::size_t line, std::string_view s, const char* what) {
  auto v = to_int(s);
  if (!v || *v < 1) syntax(line, fmt::format("expected a positive integer for {}, got '{}'", what, s));
  return static_cast<std::uint64_t>(*v);
}

Elem parse_coefficient(std::size_t line, const std::string& tok, const Ring& ring) {
  if (!tok.empty() && tok.front() == '(') {
    if (tok.back() != ')') throw Error(Errc::kBadCoefficient, fmt::format("line {}: unterminated tuple '{}'", line, tok));
    if (!ring.is_field() || ring.residue_degree() == 1) {
      throw Error(Errc::kBadCoefficient, fmt::format("line {}: tuple coefficient needs f > 1", line));
    }
    std::vector<std::uint32_t> coords;
    std::string body = tok.substr(1, tok.size() - 2);
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, ',')) {
      auto v = to_int(part);
      if (!v) throw Error(Errc::kBadCoefficient, fmt::format("line {}: bad tuple entry '{}'", line, part));
      std::int64_t r = *v % static_cast<std::int64_t>(ring.p());
      coords.push_back(static_cast<std::uint32_t>(r < 0 ? r + ring.p() : r));
    }
    if (coords.empty() || coords.size() > ring.residue_degree()) {
      throw Error(Errc::kBadCoefficient, fmt::format("line {}: tuple '{}' has the wrong length", line, tok));
    }
    coords.resize(ring.residue_degree(), 0);
    return ring.field().from_element(gf::FieldElement{coords});
  }
  auto v = to_int(tok);
  if (!v) throw Error(Errc::kBadCoefficient, fmt::format("line {}: bad coefficient '{}'", line, tok));
  return ring.from_int(*v);
}

std::string format_coefficient(const Ring& ring, Elem c) {
  if (ring.is_field() && ring.residue_degree() > 1) {
    auto e = ring.field().to_element(c);
    std::string out = "(";
    for (std::size_t i = 0; i < e.coords.size(); ++i) out += (i ? "," : "") + std::to_string(e.coords[i]);
    return out + ")";
  }
  const std::int64_t m = ring.order();
  const std::int64_t v = c;
  return std::to_string(2 * v > m ? v - m : v);
}

}  // namespace

lie::Table parse_lie(std::string_view text) {
  std::optional<std::string> name;
  std::optional<CoefficientRing> ring_spec;
  std::optional<std::size_t> dim;
  struct RawBracket {
    std::size_t line;
    std::size_t i, j;
    std::vector<std::pair<std::string, std::size_t>> terms;
  };
  std::vector<RawBracket> brackets;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "name") {
      if (name) syntax(lineno, "duplicate name");
      if (toks.size() < 2) syntax(lineno, "name needs a value");
      std::string n = toks[1];
      for (std::size_t t = 2; t < toks.size(); ++t) n += " " + toks[t];
      name = n;
    } else if (kw == "ring") {
      if (ring_spec) syntax(lineno, "duplicate ring");
      std::optional<std::uint64_t> p, f, e;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        auto eq = toks[t].find('=');
        if (eq == std::string::npos) syntax(lineno, fmt::format("expected key=value, got '{}'", toks[t]));
        std::string key = toks[t].substr(0, eq);
        std::uint64_t v = parse_positive(lineno, std::string_view(toks[t]).substr(eq + 1), key.c_str());
        auto& slot = key == "p" ? p : key == "f" ? f : key == "e" ? e : (syntax(lineno, "unknown ring key '" + key + "'"), p);
        if (slot) syntax(lineno, fmt::format("duplicate ring key '{}'", key));
        slot = v;
      }
      if (!p) syntax(lineno, "ring needs p=<prime>");
      if (f && e) syntax(lineno, "f and e are mutually exclusive");
      try {
        ring_spec = e ? CoefficientRing::modular(static_cast<std::uint32_t>(*p), static_cast<std::uint32_t>(*e))
                      : CoefficientRing::field(gf::make_field(*p, f.value_or(1)));
      } catch (const Error& err) {
        syntax(lineno, err.what());
      }
    } else if (kw == "dim") {
      if (dim) syntax(lineno, "duplicate dim");
      if (toks.size() != 2) syntax(lineno, "dim takes one value");
      dim = parse_positive(lineno, toks[1], "dim");
    } else if (kw == "bracket") {
      if (toks.size() < 4 || toks[3] != ":") syntax(lineno, "expected 'bracket <i> <j> : <coeff> <k> ...'");
      if ((toks.size() - 4) % 2 != 0) syntax(lineno, "terms come in <coeff> <k> pairs");
      RawBracket b{lineno, parse_positive(lineno, toks[1], "i"), parse_positive(lineno, toks[2], "j"), {}};
      if (b.i == b.j) syntax(lineno, "bracket indices must differ");
      for (std::size_t t = 4; t < toks.size(); t += 2) {
        b.terms.emplace_back(toks[t], parse_positive(lineno, toks[t + 1], "k"));
      }
      brackets.push_back(std::move(b));
    } else {
      syntax(lineno, fmt::format("unknown keyword '{}'", kw));
    }
  }
  if (!ring_spec) syntax(lineno, "missing ring line");
  if (!dim) syntax(lineno, "missing dim line");

  lie::Table table(name.value_or("unnamed"), *ring_spec, *dim);
  const Ring& ring = table.ring();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : brackets) {
    if (b.i > *dim || b.j > *dim) syntax(b.line, "bracket index exceeds dim");
    auto key = std::minmax(b.i, b.j);
    if (!seen.insert(key).second) {
      throw Error(Errc::kDuplicateBracket, fmt::format("line {}: pair ({},{}) already given", b.line, key.first, key.second));
    }
    std::map<std::uint32_t, Elem> acc;
    for (const auto& [coeff, k] : b.terms) {
      if (k > *dim) syntax(b.line, "term index exceeds dim");
      auto& slot = acc[static_cast<std::uint32_t>(k - 1)];
      slot = ring.add(slot, parse_coefficient(b.line, coeff, ring));
    }
    std::vector<lie::Term> terms;
    for (const auto& [k, c] : acc) terms.push_back({k, c});
    table.set_bracket(b.i - 1, b.j - 1, std::move(terms));
  }
  lie::validate(table);
  return table;
}

std::string emit_lie(const lie::Table& table) {
  const Ring& ring = table.ring();
  const CoefficientRing& spec = ring.spec();
  std::string out = fmt::format("name {}\n", table.name());
  if (spec.is_field()) {
    out += spec.residue_degree() == 1 ? fmt::format("ring p={}\n", spec.p())
                                      : fmt::format("ring p={} f={}\n", spec.p(), spec.residue_degree());
  } else {
    out += fmt::format("ring p={} e={}\n", spec.p(), spec.length());
  }
  out += fmt::format("dim {}\n", table.dim());
  for (const auto& [ij, terms] : table.entries()) {
    out += fmt::format("bracket {} {} :", ij.first + 1, ij.second + 1);
    for (const auto& t : terms) out += fmt::format(" {} {}", format_coefficient(ring, t.c), t.k + 1);
    out += "\n";
  }
  return out;
}

lie::Table read_lie_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kInvalidArgument, fmt::format("cannot open '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lie(ss.str());
}

void write_lie_file(const std::string& path, const lie::Table& table) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::kInvalidArgument, fmt::format("cannot write '{}'", path));
  out << emit_lie(table);
}

}  // namespace pgc
