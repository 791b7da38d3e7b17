#include "lieinv/covariant.hpp"
#include "lieinv/error.hpp"
#include "lieinv/invariants.hpp"
#include "lieinv/liealg.hpp"
#include "lieinv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace {

using namespace lieinv;
using nlohmann::json;

constexpr int kFailed = 1;
constexpr int kError = 2;

struct Globals {
  std::uint64_t seed = SamplerConfig{}.seed;
  int points = SamplerConfig{}.points;
  double tol = SamplerConfig{}.tol;
  std::string format = "text";
  bool pretty = false;

  SamplerConfig sampler() const {
    SamplerConfig s;
    s.seed = seed;
    s.points = points;
    s.tol = tol;
    return s;
  }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Display form: exp(a) -> e^(a) (e^a for a bare token), products by juxtaposition.
std::string pretty(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (s.compare(i, 4, "exp(") == 0 && (i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1])))) {
      std::size_t depth = 1, k = i + 4;
      for (; k < s.size() && depth > 0; ++k) depth += s[k] == '(' ? 1 : s[k] == ')' ? -1 : 0;
      const std::string arg = pretty(s.substr(i + 4, k - i - 5));
      const bool bare = std::all_of(arg.begin(), arg.end(),
                                    [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
      out += bare ? "e^" + arg : "e^(" + arg + ")";
      i = k;
    } else {
      out += s[i] == '*' ? ' ' : s[i];
      ++i;
    }
  }
  return out;
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, Rational> out;
  for (const auto& kv : kvs) {
    std::stringstream ss(kv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--params", "expected k=v, got '" + item + "'");
      out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    }
  }
  return out;
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Catalog entry, or an entry built from a structure-constant file.
AlgebraEntry load_algebra(const std::string& source, const std::map<std::string, Rational>& params,
                          const SamplerConfig& s) {
  if (!is_file(source)) return catalog_lookup(source, params, s);
  AlgebraEntry e;
  e.name = stem(source);
  e.constants = StructureConstants::from_file(source, params);
  validate(e.constants);
  const auto n = static_cast<std::size_t>(e.constants.dim());
  e.free = build_invariant_fields(e.constants, numbered("x", n), s);
  if (n >= 2) e.transitive = build_invariant_fields(e.constants, transitive_coordinates(n), s);
  return e;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_validate(const Globals& g, const std::string& input) {
  json j{{"input", input}};
  bool valid = true;
  try {
    const StructureConstants c = StructureConstants::from_file(input);
    j["dim"] = c.dim();
    validate(c);
  } catch (const JacobiViolation& v) {
    valid = false;
    j["violation"] = {v.i(), v.j(), v.k(), v.l()};
  }
  j["valid"] = valid;
  if (g.format == "json") {
    emit(j);
  } else {
    std::cout << input << ": " << (valid ? "valid" : "invalid") << "\n";
    if (!valid) {
      const auto& q = j["violation"];
      std::cout << "Jacobi identity violated at (i,j,k,l)=(" << q[0] << "," << q[1] << "," << q[2] << "," << q[3]
                << ")\n";
    }
  }
  return valid ? 0 : kFailed;
}

int cmd_fields(const Globals& g, const std::string& algebra, const std::string& pipeline,
               const std::vector<std::string>& kvs) {
  const SamplerConfig s = g.sampler();
  const AlgebraEntry e = load_algebra(algebra, parse_params(kvs), s);
  const InvariantFields& f = pipeline == "transitive" ? e.transitive : e.free;
  if (f.xi.empty()) throw Error("cli", "no transitive realization for a one-dimensional algebra");
  const RealizationReport rep = verify_realization(f.xi, f.eta, e.constants, s);
  auto show = [&](const VectorField& x) { return g.pretty ? pretty(x.render()) : x.render(); };

  if (g.format == "json") {
    json j{{"algebra", entry_label(e)}, {"pipeline", pipeline}, {"verified", rep.pass}, {"seed", s.seed}};
    std::vector<std::string> coords, xi, eta;
    for (Symbol c : f.coordinates) coords.push_back(c.name());
    for (const auto& x : f.xi) xi.push_back(show(x));
    for (const auto& x : f.eta) eta.push_back(show(x));
    j["coordinates"] = coords;
    j["xi"] = xi;
    j["eta"] = eta;
    emit(j);
  } else if (g.format == "csv") {
    std::cout << "kind,index,field\n";
    for (std::size_t i = 0; i < f.xi.size(); ++i) std::cout << "xi," << i + 1 << "," << csv_field(show(f.xi[i])) << "\n";
    for (std::size_t i = 0; i < f.eta.size(); ++i)
      std::cout << "eta," << i + 1 << "," << csv_field(show(f.eta[i])) << "\n";
  } else {
    std::cout << entry_label(e) << " (" << pipeline << ")\n";
    for (std::size_t i = 0; i < f.xi.size(); ++i) std::cout << "  xi_" << i + 1 << " = " << show(f.xi[i]) << "\n";
    for (std::size_t i = 0; i < f.eta.size(); ++i) std::cout << "  eta_" << i + 1 << " = " << show(f.eta[i]) << "\n";
    std::cout << "realization " << (rep.pass ? "verified" : "FAILED") << "\n";
  }
  return rep.pass ? 0 : kFailed;
}

int cmd_invariants(const Globals& g, const std::string& algebra, const std::string& pipeline, int m,
                   const std::vector<std::string>& kvs, bool unchecked) {
  const SamplerConfig s = g.sampler();
  const AlgebraEntry e = load_algebra(algebra, parse_params(kvs), s);
  PipelineResult r = pipeline == "transitive" ? type2_pipeline(e, s) : type1_pipeline(e, m, s);
  InvariantSet& set = r.set;

  const auto pro = prolong_all(set.space, set.generators);
  std::vector<bool> annihilated;
  for (const auto& li : set.invariants) annihilated.push_back(annihilation_check(set.space, pro, li.expr, s));
  const int rank = functional_rank(set.space, set.exprs(), s);
  set.verified = std::all_of(annihilated.begin(), annihilated.end(), [](bool b) { return b; }) &&
                 rank == static_cast<int>(set.invariants.size());
  if (!set.verified && !unchecked) {
    std::cerr << "error [verify]: invariants of " << set.algebra
              << " failed verification; rerun with --unchecked to print them anyway\n";
    return kFailed;
  }
  auto show = [&](const Expr& x) { return g.pretty ? pretty(render(x)) : render(x); };

  if (g.format == "json") {
    json j = to_json(r, s.seed);
    if (g.pretty) {
      for (auto& inv : j["invariants"]) inv["expr"] = pretty(inv["expr"].get<std::string>());
      j["template"] = pretty(j["template"].get<std::string>());
    }
    j["verification"] = {{"annihilated", annihilated},
                         {"rank", rank},
                         {"expected_rank", set.invariants.size()},
                         {"points", s.points},
                         {"tol", s.tol}};
    emit(j);
  } else if (g.format == "csv") {
    std::cout << "label,expr\n";
    for (const auto& [label, x] : set.invariants) std::cout << csv_field(label) << "," << csv_field(show(x)) << "\n";
  } else {
    std::cout << set.algebra << " type " << pipeline_tag(set.pipeline);
    if (set.pipeline == PipelineKind::I) std::cout << " m=" << set.m;
    std::cout << "\n";
    for (const auto& [label, x] : set.invariants) std::cout << "  " << label << " = " << show(x) << "\n";
    std::cout << "template: " << show(r.equation.lhs) << " = 0\n";
    std::cout << (set.verified ? "verified" : "UNVERIFIED") << " (rank " << rank << "/" << set.invariants.size()
              << ", seed " << s.seed << ")\n";
  }
  return set.verified ? 0 : kFailed;
}

int cmd_covariant(const Globals& g, const std::string& to, const std::string& from) {
  const SamplerConfig s = g.sampler();
  auto show = [&](const Expr& x) { return g.pretty ? pretty(render(x)) : render(x); };
  if (!to.empty()) {
    const PDEFile f = read_pde_file(to);
    const CovariantPDE t = to_covariant({f.space, f.lhs});
    const RescaleReport rep = rescale_invariance_check(t, s);
    if (g.format == "json") {
      emit({{"input", to},
            {"direction", "to"},
            {"lhs", show(t.lhs)},
            {"kappa", t.kappa},
            {"rescale_invariant", rep.pass},
            {"degree", to_string(rep.degree)}});
    } else {
      std::cout << show(t.lhs) << " = 0\n";
      std::cout << "kappa " << t.kappa << ", degree " << to_string(rep.degree) << ", rescale invariant "
                << (rep.pass ? "yes" : "no") << "\n";
    }
    return rep.pass ? 0 : kFailed;
  }
  const PDEFile f = read_pde_file(from);
  const CovariantPDE t{f.space, f.lhs, 0};
  const RescaleReport rep = rescale_invariance_check(t, s);
  if (!rep.pass) {
    std::cerr << "error [covariant]: not rescale invariant: homogeneous " << (rep.homogeneous ? "yes" : "no");
    for (std::size_t j = 0; j < rep.annihilated.size(); ++j)
      std::cerr << ", R_" << j + 1 << " " << (rep.annihilated[j] ? "annihilates" : "does not annihilate");
    std::cerr << "\n";
    return kFailed;
  }
  const ScalarPDE e = from_covariant(t, s);
  if (g.format == "json") {
    emit({{"input", from},
          {"direction", "from"},
          {"lhs", show(e.lhs)},
          {"degree", to_string(rep.degree)},
          {"rescale_invariant", true},
          {"annihilated", rep.annihilated}});
  } else {
    std::cout << show(e.lhs) << " = 0\n";
    std::cout << "rescale invariant: degree " << to_string(rep.degree) << ", all R_j annihilate\n";
  }
  return 0;
}

int cmd_reproduce(const Globals& g, const std::string& which, std::vector<std::string> tables,
                  const std::vector<std::string>& params) {
  SuiteOptions o;
  o.sampler = g.sampler();
  if (!which.empty() && which != "all") throw CLI::ValidationError("reproduce", "expected 'all', got '" + which + "'");
  const auto known = fixture_tables();
  for (const auto& t : tables)
    if (std::find(known.begin(), known.end(), t) == known.end())
      throw CLI::ValidationError("--table", "unknown table '" + t + "'");
  if (std::find(tables.begin(), tables.end(), "all") == tables.end()) o.tables = std::move(tables);
  for (const auto& p : params) {
    const auto colon = p.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--params", "expected algebra:k=v, got '" + p + "'");
    o.params[p.substr(0, colon)].push_back(parse_params({p.substr(colon + 1)}));
  }
  const SuiteReport r = run_fixture_suite(o);
  if (g.format == "json")
    emit(to_json(r));
  else if (g.format == "csv")
    std::cout << to_csv(r);
  else
    std::cout << to_text(r);
  return r.pass ? 0 : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential invariants and invariant PDEs of low-dimensional Lie algebras", "lieinv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "lieinv 0.1.0");

  Globals g;
  if (const char* env = std::getenv("LIEINV_SEED")) {
    try {
      g.seed = std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      std::cerr << "error [cli]: LIEINV_SEED is not an integer: " << env << "\n";
      return kError;
    }
  }
  app.add_option("--seed", g.seed, "Sampler seed (default: $LIEINV_SEED or 12648430)");
  app.add_option("--points", g.points, "Sample points per numeric check")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "Relative tolerance of the numeric zero test")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--pretty", g.pretty, "Display forms (e^u, juxtaposed products) instead of the canonical grammar");

  std::string input;
  auto* validate_cmd = app.add_subcommand("validate", "Check the Jacobi identity of a structure-constant file");
  validate_cmd->add_option("input", input, "Algebra JSON file")->required()->check(CLI::ExistingFile);

  std::string algebra, pipeline = "transitive";
  std::vector<std::string> kvs;
  auto* fields_cmd = app.add_subcommand("fields", "Left- and right-invariant vector fields of an algebra");
  fields_cmd->add_option("algebra", algebra, "Catalog name or algebra JSON file")->required();
  fields_cmd->add_option("--pipeline", pipeline, "free (x1..xn) or transitive (x, y, u)")
      ->check(CLI::IsMember({"free", "transitive"}));
  fields_cmd->add_option("--params", kvs, "Algebra parameters k=v");

  int m = 2;
  bool unchecked = false;
  auto* inv_cmd = app.add_subcommand("invariants", "Second-order differential invariants and the invariant PDE");
  inv_cmd->add_option("algebra", algebra, "Catalog name or algebra JSON file")->required();
  inv_cmd->add_option("--pipeline", pipeline, "free (type I) or transitive (type II)")
      ->check(CLI::IsMember({"free", "transitive"}));
  inv_cmd->add_option("--m", m, "Type I only: adds m - 1 variables y the group does not act on")
      ->check(CLI::PositiveNumber);
  inv_cmd->add_option("--params", kvs, "Algebra parameters k=v");
  inv_cmd->add_flag("--unchecked", unchecked, "Print results even if verification fails");

  std::string to, from;
  auto* cov_cmd = app.add_subcommand("covariant", "Convert a PDE file to or from the covariant form");
  auto* to_opt = cov_cmd->add_option("--to", to, "Scalar PDE file")->check(CLI::ExistingFile);
  auto* from_opt = cov_cmd->add_option("--from", from, "Covariant PDE file")->check(CLI::ExistingFile);
  to_opt->excludes(from_opt);
  cov_cmd->require_option(1);

  std::string which;
  std::vector<std::string> tables, suite_params;
  auto* rep_cmd = app.add_subcommand("reproduce", "Re-derive the classification tables and compare");
  rep_cmd->add_option("which", which, "'all' for every table");
  rep_cmd->add_option("--table", tables, "Table name (repeatable)")
      ->check(CLI::IsMember({"1d", "2d-free", "3d-free", "2d-transitive", "3d-transitive", "all"}));
  rep_cmd->add_option("--params", suite_params, "Parameter draw algebra:k=v (repeatable), e.g. g3_4:h=1/3");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) return cmd_validate(g, input);
    if (*fields_cmd) return cmd_fields(g, algebra, pipeline, kvs);
    if (*inv_cmd) return cmd_invariants(g, algebra, pipeline, m, kvs, unchecked);
    if (*cov_cmd) return cmd_covariant(g, to, from);
    if (*rep_cmd) return cmd_reproduce(g, which, tables, suite_params);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error [" << e.module() << "]: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
