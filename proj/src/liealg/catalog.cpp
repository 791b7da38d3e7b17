#include "lieinv/error.hpp"
#include "lieinv/liealg.hpp"
#include "lieinv/parse.hpp"

#include <algorithm>
#include <random>

namespace lieinv {

namespace {

struct Bracket {
  int i, j, k;
  const char* c;  // may mention h or p
};

struct Spec {
  const char* name;
  int dim;
  std::vector<Bracket> brackets;
  // Closed-form fields on x1..xn, one string per component ("" is 0).
  std::vector<std::vector<const char*>> xi;
  std::vector<std::vector<const char*>> eta;
  // Type II: position of z^i among the transitive coordinates; empty means
  // the identity assignment.
  std::vector<int> relabel;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> table = {
      {"g1", 1, {}, {{"1"}}, {{"1"}}, {}},
      {"2g1", 2, {}, {{"1", ""}, {"", "1"}}, {{"1", ""}, {"", "1"}}, {}},
      {"g2", 2, {{1, 2, 1, "1"}},
       {{"1", ""}, {"x1", "1"}},
       {{"exp(x2)", ""}, {"", "1"}}, {}},
      {"3g1", 3, {},
       {{"1", "", ""}, {"", "1", ""}, {"", "", "1"}},
       {{"1", "", ""}, {"", "1", ""}, {"", "", "1"}}, {}},
      {"g1+g2", 3, {{1, 2, 1, "1"}},
       {{"1", "", ""}, {"x1", "1", ""}, {"", "", "1"}},
       {{"exp(x2)", "", ""}, {"", "1", ""}, {"", "", "1"}}, {}},
      {"g3_1", 3, {{2, 3, 1, "1"}},
       {{"1", "", ""}, {"", "1", ""}, {"x2", "", "1"}},
       {{"1", "", ""}, {"x3", "1", ""}, {"", "", "1"}}, {2, 0, 1}},
      {"g3_2", 3, {{1, 3, 1, "1"}, {2, 3, 1, "1"}, {2, 3, 2, "1"}},
       {{"1", "", ""}, {"", "1", ""}, {"x1 + x2", "x2", "1"}},
       {{"exp(x3)", "", ""}, {"x3*exp(x3)", "exp(x3)", ""}, {"", "", "1"}}, {2, 1, 0}},
      {"g3_3", 3, {{1, 3, 1, "1"}, {2, 3, 2, "1"}},
       {{"1", "", ""}, {"", "1", ""}, {"x1", "x2", "1"}},
       {{"exp(x3)", "", ""}, {"", "exp(x3)", ""}, {"", "", "1"}}, {}},
      {"g3_4", 3, {{1, 3, 1, "1"}, {2, 3, 2, "h"}},
       {{"1", "", ""}, {"", "1", ""}, {"x1", "h*x2", "1"}},
       {{"exp(x3)", "", ""}, {"", "exp(h*x3)", ""}, {"", "", "1"}}, {}},
      {"g3_5", 3, {{1, 3, 1, "p"}, {1, 3, 2, "-1"}, {2, 3, 1, "1"}, {2, 3, 2, "p"}},
       {{"1", "", ""}, {"", "1", ""}, {"p*x1 + x2", "p*x2 - x1", "1"}},
       {{"exp(p*x3)*cos(x3)", "-exp(p*x3)*sin(x3)", ""},
        {"exp(p*x3)*sin(x3)", "exp(p*x3)*cos(x3)", ""},
        {"", "", "1"}}, {}},
      {"g3_6", 3, {{1, 2, 1, "1"}, {1, 3, 2, "2"}, {2, 3, 3, "1"}},
       {{"1", "", ""}, {"x1", "1", ""}, {"x1^2", "2*x1", "exp(x2)"}},
       {{"exp(x2)", "2*x3", "x3^2"}, {"", "1", "x3"}, {"", "", "1"}}, {}},
      {"g3_7", 3, {{1, 2, 3, "1"}, {2, 3, 1, "1"}, {1, 3, 2, "-1"}},
       {{"1", "", ""},
        {"sin(x1)*tan(x2)", "cos(x1)", "sin(x1)/cos(x2)"},
        {"cos(x1)*tan(x2)", "-sin(x1)", "cos(x1)/cos(x2)"}},
       {{"cos(x3)/cos(x2)", "-sin(x3)", "cos(x3)*tan(x2)"},
        {"sin(x3)/cos(x2)", "cos(x3)", "sin(x3)*tan(x2)"},
        {"", "", "1"}}, {}},
  };
  return table;
}

const Spec& find_spec(const std::string& name) {
  for (const auto& s : specs())
    if (name == s.name) return s;
  throw CatalogError("unknown algebra '" + name + "'");
}

std::vector<std::string> required_params(const std::string& name) {
  if (name == "g3_4") return {"h"};
  if (name == "g3_5") return {"p"};
  return {};
}

void check_params(const std::string& name, const std::map<std::string, Rational>& params) {
  for (const auto& [k, v] : params) {
    const auto req = required_params(name);
    if (std::find(req.begin(), req.end(), k) == req.end())
      throw CatalogError("algebra '" + name + "' has no parameter '" + k + "'");
  }
  if (name == "g3_4") {
    const Rational h = params.at("h");
    if (h > 1 || h < -1 || h == 0 || h == 1)
      throw CatalogError("g3_4 needs |h| <= 1 and h != 0, 1 (got h=" + to_string(h) + ")");
  }
  if (name == "g3_5") {
    const Rational p = params.at("p");
    if (p < 0) throw CatalogError("g3_5 needs p >= 0 (got p=" + to_string(p) + ")");
  }
}

Expr read(const char* text, const std::vector<Symbol>& coords, const std::map<std::string, Rational>& params) {
  if (*text == '\0') return Expr(0);
  ParseContext ctx;
  ctx.resolve = [&](const std::string& n) -> std::optional<Symbol> {
    for (Symbol s : coords)
      if (s.name() == n) return s;
    if (params.count(n)) return Symbol::parameter(n);
    return std::nullopt;
  };
  ctx.allow_heads = false;
  Bindings b;
  for (const auto& [k, v] : params) b.emplace(Symbol::parameter(k), Expr(v));
  return substitute(parse(text, ctx), b);
}

std::vector<VectorField> read_fields(const std::vector<std::vector<const char*>>& rows,
                                     const std::vector<Symbol>& coords,
                                     const std::map<std::string, Rational>& params) {
  std::vector<VectorField> out;
  for (const auto& row : rows) {
    std::vector<Expr> cs;
    for (const char* c : row) cs.push_back(read(c, coords, params));
    out.emplace_back(coords, std::move(cs));
  }
  return out;
}

// Renames x_i -> target[relabel[i]] and reorders components accordingly.
std::vector<VectorField> relabel_fields(const std::vector<VectorField>& fields,
                                        const std::vector<Symbol>& from, const std::vector<Symbol>& to,
                                        const std::vector<int>& position) {
  Bindings b;
  for (std::size_t i = 0; i < from.size(); ++i) b.emplace(from[i], Expr(to[position[i]]));
  std::vector<VectorField> out;
  for (const auto& f : fields) {
    std::vector<Expr> cs(to.size(), Expr(0));
    for (std::size_t i = 0; i < from.size(); ++i) cs[position[i]] = substitute(f[i], b);
    out.emplace_back(to, std::move(cs));
  }
  return out;
}

void gate(const std::string& label, const InvariantFields& f, const StructureConstants& c,
          const SamplerConfig& s) {
  const auto r = verify_realization(f.xi, f.eta, c, s);
  if (!r.pass) {
    std::string failed;
    for (const auto& p : r.pairs)
      if (!p.pass) failed += (failed.empty() ? "" : ", ") + p.relation;
    throw VerificationFailed("liealg", "catalog realization of " + label + " violates " + failed);
  }
}

}  // namespace

std::vector<std::string> transitive_coordinates(std::size_t n) {
  if (n == 2) return {"x", "u"};
  if (n == 3) return {"x", "y", "u"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i < n; ++i) out.push_back("x" + std::to_string(i));
  out.push_back("u");
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& s : specs()) out.emplace_back(s.name);
  return out;
}

AlgebraEntry catalog_lookup(const std::string& name, const std::map<std::string, Rational>& given,
                            const SamplerConfig& sampler) {
  const Spec& spec = find_spec(name);
  std::map<std::string, Rational> params = given;
  if (name == "g3_4" && !params.count("h")) params["h"] = Rational(1, 2);
  if (name == "g3_5" && !params.count("p")) params["p"] = Rational(0);
  check_params(name, params);

  AlgebraEntry e;
  e.name = name;
  e.params = params;
  e.constants = StructureConstants(spec.dim);
  for (const auto& br : spec.brackets) {
    const Expr c = read(br.c, {}, params);
    e.constants.set(br.i, br.j, br.k, e.constants.get(br.i, br.j, br.k) + c.value());
  }
  validate(e.constants);

  for (int i = 1; i <= spec.dim; ++i) e.free.coordinates.push_back(Symbol::coordinate("x" + std::to_string(i)));
  e.free.xi = read_fields(spec.xi, e.free.coordinates, params);
  e.free.eta = read_fields(spec.eta, e.free.coordinates, params);
  gate(entry_label(e), e.free, e.constants, sampler);

  if (spec.dim >= 2) {
    for (const auto& n : transitive_coordinates(spec.dim))
      e.transitive.coordinates.push_back(Symbol::coordinate(n));
    std::vector<int> position = spec.relabel;
    if (position.empty())
      for (int i = 0; i < spec.dim; ++i) position.push_back(i);
    e.transitive.xi = relabel_fields(e.free.xi, e.free.coordinates, e.transitive.coordinates, position);
    e.transitive.eta = relabel_fields(e.free.eta, e.free.coordinates, e.transitive.coordinates, position);
  }
  return e;
}

std::vector<std::map<std::string, Rational>> catalog_parameter_draws(const std::string& name) {
  find_spec(name);
  if (name == "g3_4")
    return {{{"h", Rational(1, 2)}}, {{"h", Rational(-1)}}, {{"h", Rational(-1, 3)}}};
  if (name == "g3_5") return {{{"p", Rational(0)}}, {{"p", Rational(1)}}};
  return {{}};
}

std::vector<std::map<std::string, Rational>> random_parameter_draws(const std::string& name,
                                                                   int count, std::uint64_t seed) {
  find_spec(name);
  if (required_params(name).empty()) return {{}};
  std::mt19937_64 rng(seed ^ std::hash<std::string>()(name));
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<std::map<std::string, Rational>> out;
  while (static_cast<int>(out.size()) < count) {
    const int q = den(rng);
    if (name == "g3_4") {
      const int p = std::uniform_int_distribution<int>(-q, q)(rng);
      const Rational h(p, q);
      if (h == 0 || h == 1) continue;
      out.push_back({{"h", h}});
    } else {
      const int p = std::uniform_int_distribution<int>(0, 3 * q)(rng);
      out.push_back({{"p", Rational(p, q)}});
    }
  }
  return out;
}

std::string entry_label(const AlgebraEntry& e) {
  if (e.params.empty()) return e.name;
  std::string s = e.name + "(";
  bool first = true;
  for (const auto& [k, v] : e.params) {
    s += (first ? "" : ",") + k + "=" + to_string(v);
    first = false;
  }
  return s + ")";
}

}  // namespace lieinv
