#include "pgc_cli/cli.hpp"

#include <algorithm>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "pgc/catalog.hpp"
#include "pgc/commat.hpp"
#include "pgc/enumctr.hpp"
#include "pgc/error.hpp"
#include "pgc/freenil.hpp"
#include "pgc/lazard.hpp"
#include "pgc/lie_format.hpp"
#include "pgc/poly_fit.hpp"

namespace pgc::cli {
namespace {

using json = nlohmann::ordered_json;

std::string ring_key(const CoefficientRing& r) {
  return r.is_field() ? fmt::format("f={}", r.residue_degree()) : fmt::format("e={}", r.length());
}

CoefficientRing make_ring_spec(std::uint32_t p, std::uint32_t f, std::uint32_t e) {
  if (e > 0 && f > 1) throw Error(Errc::kInvalidArgument, "f and e are mutually exclusive");
  if (e > 0) return CoefficientRing::modular(p, e);
  return CoefficientRing::field(gf::make_field(p, f));
}

struct Result {
  std::string method;
  std::optional<CountVector> cc;
  std::optional<CountVector> ch;
  std::string note;  // reason for skipping
};

void print_table(std::ostream& out, const std::optional<CountVector>& cc, const std::optional<CountVector>& ch) {
  if (cc) {
    for (const auto& [i, n] : cc->entries) {
      if (n != 0) out << fmt::format("size p^{} : {}\n", i, n.get_str());
    }
  }
  if (ch) {
    for (const auto& [i, n] : ch->entries) {
      if (n != 0) out << fmt::format("degree p^{} : {}\n", i, n.get_str());
    }
  }
  if (cc) {
    out << "k = " << cc->total().get_str() << "\n";
  } else if (ch) {
    out << "k = " << ch->total().get_str() << "\n";
  }
}

json vector_json(const CountVector& v) {
  json j = json::object();
  for (const auto& [i, n] : v.entries) {
    if (n != 0) j[std::to_string(i)] = n.get_str();
  }
  return j;
}

void emit_vectors(std::ostream& out, bool as_json, const std::string& name, const CoefficientRing& ring,
                  const std::optional<CountVector>& cc, const std::optional<CountVector>& ch,
                  const std::string& method) {
  if (as_json) {
    json j;
    j["name"] = name;
    j["p"] = ring.p();
    j["f_or_e"] = ring_key(ring);
    j["class_vector"] = cc ? vector_json(*cc) : json(nullptr);
    j["char_vector"] = ch ? vector_json(*ch) : json(nullptr);
    j["k"] = cc ? cc->total().get_str() : ch ? ch->total().get_str() : std::string();
    j["method"] = method;
    out << j.dump(2) << "\n";
    return;
  }
  out << fmt::format("# {} {} method={}\n", name, ring.describe(), method);
  print_table(out, cc, ch);
}

enumctr::Method parse_method(const std::string& s) {
  if (s == "auto") return enumctr::Method::kAuto;
  if (s == "matrix") return enumctr::Method::kMatrix;
  if (s == "dual") return enumctr::Method::kDual;
  throw Error(Errc::kInvalidArgument, fmt::format("unknown method '{}'", s));
}

std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(Errc::kInvalidArgument, fmt::format("bad list entry '{}'", part));
    }
  }
  if (out.empty()) throw Error(Errc::kInvalidArgument, "empty list");
  return out;
}

std::string format_modulus(const gf::FieldSpec& spec) {
  if (spec.f == 1) return "t";
  std::string out = fmt::format("t^{}", spec.f);
  for (std::size_t i = spec.f; i-- > 0;) {
    const auto c = spec.modulus[i];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : i == 1 ? "t" : fmt::format("t^{}", i);
    out += " + " + (c == 1 && i > 0 ? mono : std::to_string(c) + mono);
  }
  return out;
}

// Closed forms or catalog formulas for tables recognized by name.
std::optional<Result> closed_form(const lie::Table& t) {
  const CoefficientRing& ring = t.ring().spec();
  if (!ring.is_field()) return std::nullopt;
  const std::uint32_t p = ring.p();
  const std::uint32_t f = ring.residue_degree();
  std::smatch m;
  const std::string& name = t.name();
  static const std::regex free_re("free-r(\\d+)-c(\\d+)");
  if (std::regex_match(name, m, free_re)) {
    const int r = std::stoi(m[1]);
    const int c = std::stoi(m[2]);
    Result res{"closed-form", freenil::class_vector_closed(r, c, p, f), std::nullopt, ""};
    if (c == 1) {
      CountVector ch(p);
      ch.add(0, pow_mpz(p, static_cast<unsigned long>(r) * f));
      res.ch = ch;
    } else if (c == 2) {
      res.ch = freenil::char_vector_class2(r, p, f);
    } else {
      try {
        res.ch = freenil::fixture_vectors(r, c, p, f).ch;
      } catch (const Error& e) {
        if (e.code() != Errc::kUnknownFixture) throw;
      }
    }
    return res;
  }
  if (name == "heisenberg") {
    auto e = catalog::heisenberg_entry(ring).expected;
    return Result{"closed-form", e->cc, e->ch, ""};
  }
  if (name == "quadric") {
    auto e = catalog::quadric_expected(p, f);
    return Result{"closed-form", e.cc, e.ch, ""};
  }
  if (name.rfind("boston-isaacs", 0) == 0) {
    auto pc = catalog::pfaffian_case_vectors(t);
    return Result{"pfaffian-case", pc.cc, pc.ch, ""};
  }
  return std::nullopt;
}

int verify(const lie::Table& t, const EnumOptions& options, std::uint64_t oracle_budget, std::ostream& out) {
  const Ring& ring = t.ring();
  enumctr::require_class_below_p(t);
  std::vector<Result> results;
  auto attempt = [&](const std::string& method, auto&& fn) {
    try {
      results.push_back(fn());
      results.back().method = method;
    } catch (const Error& e) {
      if (e.code() != Errc::kBudgetExceeded) throw;
      results.push_back({method, std::nullopt, std::nullopt, e.what()});
    }
  };
  if (ring.is_field()) {
    attempt("matrix", [&] {
      auto v = enumctr::vectors_matrix(t, options);
      return Result{"", v.cc, v.ch, ""};
    });
  }
  if (!ring.is_field() || ring.residue_degree() == 1) {
    attempt("dual", [&] {
      auto v = enumctr::vectors_dual(t, options);
      return Result{"", v.cc, v.ch, ""};
    });
  }
  if (auto cf = closed_form(t)) results.push_back(*cf);
  lazard::OracleOptions oo{oracle_budget};
  attempt("conjugacy-oracle", [&] { return Result{"", lazard::conjugacy_census(t, oo), std::nullopt, ""}; });
  attempt("coadjoint-oracle", [&] { return Result{"", std::nullopt, lazard::coadjoint_census(t, oo), ""}; });

  out << fmt::format("# verify {} {}\n", t.name(), ring.spec().describe());
  const Result* ref_cc = nullptr;
  const Result* ref_ch = nullptr;
  bool ok = true;
  std::size_t ran = 0;
  for (const auto& r : results) {
    if (!r.cc && !r.ch) {
      out << fmt::format("{}: skipped ({})\n", r.method, r.note);
      continue;
    }
    ++ran;
    std::string line = r.method + ":";
    if (r.cc) {
      line += " cc " + r.cc->format();
      if (!ref_cc) {
        ref_cc = &r;
      } else if (!(*r.cc == *ref_cc->cc)) {
        ok = false;
        line += fmt::format(" MISMATCH vs {}", ref_cc->method);
      }
    }
    if (r.ch) {
      line += " ch " + r.ch->format();
      if (!ref_ch) {
        ref_ch = &r;
      } else if (!(*r.ch == *ref_ch->ch)) {
        ok = false;
        line += fmt::format(" MISMATCH vs {}", ref_ch->method);
      }
    }
    out << line << "\n";
  }
  if (ran == 0) {
    out << "# no method completed within budget\n";
    return kBudget;
  }
  if (ref_cc && ref_ch && ref_cc->cc->total() != ref_ch->ch->total()) ok = false;
  out << (ok ? fmt::format("# {} methods agree\n", ran) : std::string("# mismatch\n"));
  return ok ? kOk : kMismatch;
}

int exit_code_for(Errc code) { return code == Errc::kBudgetExceeded ? kBudget : kInvalidInput; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Class and character vectors of p-groups from Lie-ring structure constants", "pgc"};
  app.require_subcommand(1);

  std::string file;
  std::uint32_t p = 0, f = 1, e = 0;
  unsigned threads = 1;
  std::uint64_t budget = EnumOptions{}.budget;
  std::uint64_t oracle_budget = lazard::OracleOptions{}.budget;
  bool as_json = false;
  std::string method = "auto";
  std::string emit;
  int r = 2, c = 2;

  auto* field_cmd = app.add_subcommand("field", "Show the field GF(p^f) and its modulus");
  bool list_elements = false;
  field_cmd->add_option("-p", p, "characteristic")->required();
  field_cmd->add_option("-f", f, "degree");
  field_cmd->add_flag("--elements", list_elements, "list all elements");

  auto* analyze_cmd = app.add_subcommand("analyze", "Series, adapted basis and commutator matrices");
  analyze_cmd->add_option("file", file)->required();

  auto* vectors_cmd = app.add_subcommand("vectors", "Class and character vectors by enumeration");
  vectors_cmd->add_option("file", file)->required();
  vectors_cmd->add_option("--method", method, "auto|matrix|dual");
  vectors_cmd->add_option("--threads", threads);
  vectors_cmd->add_option("--budget", budget, "maximum points per enumeration");
  vectors_cmd->add_flag("--json", as_json);

  auto* free_cmd = app.add_subcommand("free", "Free nilpotent groups F_{r,c}(F_q)");
  bool closed_flag = false, enumerate_flag = false;
  free_cmd->add_option("-r", r)->required();
  free_cmd->add_option("-c", c)->required();
  free_cmd->add_option("-p", p)->required();
  free_cmd->add_option("-f", f);
  auto* closed_opt = free_cmd->add_flag("--closed-form", closed_flag);
  free_cmd->add_flag("--enumerate", enumerate_flag)->excludes(closed_opt);
  free_cmd->add_option("--emit", emit, "write the table as a .lie file");
  free_cmd->add_option("--threads", threads);
  free_cmd->add_option("--budget", budget);
  free_cmd->add_flag("--json", as_json);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force Lazard/Kirillov census");
  bool classes_flag = false, orbits_flag = false;
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_flag("--classes", classes_flag);
  oracle_cmd->add_flag("--orbits", orbits_flag);
  oracle_cmd->add_option("--budget", oracle_budget, "maximum group order");
  oracle_cmd->add_flag("--json", as_json);

  auto* catalog_cmd = app.add_subcommand("catalog", "Named example tables");
  std::string name;
  std::int64_t alpha = 1;
  std::string I = "1";
  int l = 2, n = 3;
  std::string variant = "block";
  catalog_cmd->add_option("name", name, "heisenberg|boston-isaacs|quadric|isaacs-cd|fm")->required();
  catalog_cmd->add_option("-p", p)->required();
  catalog_cmd->add_option("-f", f);
  catalog_cmd->add_option("-e", e);
  catalog_cmd->add_option("--alpha", alpha);
  catalog_cmd->add_option("--I", I, "comma-separated set for isaacs-cd");
  catalog_cmd->add_option("--variant", variant, "block|relations for isaacs-cd");
  catalog_cmd->add_option("-l", l);
  catalog_cmd->add_option("-n", n);
  catalog_cmd->add_option("--emit", emit);

  auto* fit_cmd = app.add_subcommand("fit", "Fit polynomials in q to counts of F_{r,c}(F_q)");
  std::string target = "k";
  std::string at;
  fit_cmd->add_option("-r", r)->required();
  fit_cmd->add_option("-c", c)->required();
  fit_cmd->add_option("--target", target, "cc|ch|k");
  fit_cmd->add_option("--at", at, "comma-separated primes q")->required();
  fit_cmd->add_option("--budget", budget);
  fit_cmd->add_option("--threads", threads);

  auto* verify_cmd = app.add_subcommand("verify", "Run every applicable method and compare");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--threads", threads);
  verify_cmd->add_option("--budget", budget);
  verify_cmd->add_option("--oracle-budget", oracle_budget);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  EnumOptions options;
  options.threads = std::max(1u, threads);
  options.budget = budget;

  try {
    if (*field_cmd) {
      gf::Field F(gf::make_field(p, f));
      out << fmt::format("# GF({}) p={} f={}\n", F.order(), p, f);
      out << "modulus " << format_modulus(F.spec()) << "\n";
      if (list_elements) {
        for (Elem x = 0; x < F.order(); ++x) out << fmt::format("{} {}\n", x, F.format(x));
      }
      return kOk;
    }
    if (*analyze_cmd) {
      lie::Table t = read_lie_file(file);
      const Ring& ring = t.ring();
      auto lcs = lie::lower_central_series(t);
      out << fmt::format("# {} {}\n", t.name(), ring.spec().describe());
      out << fmt::format("dim {}\n", t.dim());
      out << fmt::format("class {}\n", lcs.nilpotency_class);
      std::string orders;
      for (const auto& term : lcs.terms) orders += fmt::format(" p^{}", term.log_order);
      out << "lower central series" << orders << "\n";
      out << fmt::format("centre p^{}\n", lie::centre(t).log_order);
      out << fmt::format("derived p^{}\n", lie::derived(t).log_order);
      if (ring.is_field()) {
        auto ab = lie::adapt_basis(t);
        auto mats = commat::build_commutator_matrices(ab.table, ab.a, ab.b);
        out << fmt::format("a {}\nb {}\n", ab.a, ab.b);
        out << "A(X) =\n" << commat::to_string(ring.field(), mats.A, "X");
        out << "B(Y) =\n" << commat::to_string(ring.field(), mats.B, "Y");
      }
      return kOk;
    }
    if (*vectors_cmd) {
      lie::Table t = read_lie_file(file);
      auto v = enumctr::compute_vectors(t, parse_method(method), options);
      emit_vectors(out, as_json, t.name(), t.ring().spec(), v.cc, v.ch, v.method);
      return kOk;
    }
    if (*free_cmd) {
      const CoefficientRing ring = CoefficientRing::field(gf::make_field(p, f));
      if (!emit.empty()) write_lie_file(emit, freenil::free_table_unchecked(r, c, ring));
      const std::string label = freenil::free_table_name(r, c);
      if (enumerate_flag) {
        auto t = freenil::free_table(r, c, ring);
        auto v = enumctr::compute_vectors(t, enumctr::Method::kMatrix, options);
        emit_vectors(out, as_json, label, ring, v.cc, v.ch, v.method);
        return kOk;
      }
      if (static_cast<std::uint32_t>(c) >= p) throw Error(Errc::kClassTooLarge, "closed forms need c < p");
      lie::Table stub(label, ring, 1);
      auto res = closed_form(stub);
      emit_vectors(out, as_json, label, ring, res->cc, res->ch, "closed-form");
      return kOk;
    }
    if (*oracle_cmd) {
      lie::Table t = read_lie_file(file);
      lazard::OracleOptions oo{oracle_budget};
      const bool both = !classes_flag && !orbits_flag;
      std::optional<CountVector> cc, ch;
      if (classes_flag || both) cc = lazard::conjugacy_census(t, oo);
      if (orbits_flag || both) ch = lazard::coadjoint_census(t, oo);
      emit_vectors(out, as_json, t.name(), t.ring().spec(), cc, ch, "oracle");
      return kOk;
    }
    if (*catalog_cmd) {
      std::optional<lie::Table> t;
      if (name == "heisenberg") {
        t = catalog::heisenberg_table(make_ring_spec(p, f, e));
      } else if (name == "boston-isaacs") {
        t = catalog::boston_isaacs_table(alpha, p);
      } else if (name == "quadric") {
        t = catalog::quadric_table(p, f);
      } else if (name == "isaacs-cd") {
        std::set<int> set;
        for (auto i : parse_list(I)) set.insert(static_cast<int>(i));
        if (variant != "block" && variant != "relations") {
          throw Error(Errc::kInvalidArgument, fmt::format("unknown variant '{}'", variant));
        }
        t = catalog::isaacs_cd_table(
            set, p, variant == "block" ? catalog::IsaacsVariant::kBlock : catalog::IsaacsVariant::kRelationList);
      } else if (name == "fm") {
        t = catalog::fm_table(l, n, p);
      } else {
        throw Error(Errc::kInvalidArgument, fmt::format("unknown catalog entry '{}'", name));
      }
      if (emit.empty()) {
        out << emit_lie(*t);
      } else {
        write_lie_file(emit, *t);
      }
      return kOk;
    }
    if (*fit_cmd) {
      if (target != "cc" && target != "ch" && target != "k") {
        throw Error(Errc::kInvalidArgument, fmt::format("unknown target '{}'", target));
      }
      std::map<int, std::vector<std::pair<mpz_class, mpz_class>>> samples;
      const auto qs = parse_list(at);
      for (auto q : qs) {
        const auto qp = static_cast<std::uint32_t>(q);
        if (target == "ch") {
          auto t = freenil::free_table(r, c, CoefficientRing::field(gf::make_field(qp, 1)));
          auto v = enumctr::compute_vectors(t, enumctr::Method::kMatrix, options);
          for (const auto& [i, cnt] : v.ch.entries) samples[i].emplace_back(q, cnt);
        } else {
          if (static_cast<std::uint32_t>(c) >= qp) throw Error(Errc::kClassTooLarge, "closed forms need c < p");
          auto cc = freenil::class_vector_closed(r, c, qp, 1);
          if (target == "k") {
            samples[0].emplace_back(q, cc.total());
          } else {
            for (const auto& [i, cnt] : cc.entries) samples[i].emplace_back(q, cnt);
          }
        }
      }
      out << fmt::format("# {} target={} at {}\n", freenil::free_table_name(r, c), target, at);
      for (auto& [i, pts] : samples) {
        // Entries absent at some nodes are zero there.
        for (auto q : qs) {
          if (std::none_of(pts.begin(), pts.end(), [&](const auto& s) { return s.first == q; })) pts.emplace_back(q, 0);
        }
        std::sort(pts.begin(), pts.end());
        auto fit = poly_fit(pts);
        const std::string lhs = target == "k" ? "k" : fmt::format("{} q^{}", target == "cc" ? "size" : "degree", i);
        out << fmt::format("{} = {}\n", lhs, fit.poly.format("q"));
        out << fmt::format("{} = {}  (v = q-1)\n", lhs, fit.shifted.format("v"));
      }
      return kOk;
    }
    if (*verify_cmd) {
      lie::Table t = read_lie_file(file);
      return verify(t, options, oracle_budget, out);
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_code_for(ex.code());
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace pgc::cli
