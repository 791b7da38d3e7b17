#include "lieinv/invariants.hpp"

#include "lieinv/error.hpp"

#include <algorithm>
#include <cctype>

namespace lieinv {

namespace {

std::vector<std::string> names_of(const std::vector<Symbol>& syms) {
  std::vector<std::string> out;
  for (Symbol s : syms) out.push_back(s.name());
  return out;
}

std::vector<std::string> param_names(const std::map<std::string, Rational>& params) {
  std::vector<std::string> out;
  for (const auto& [k, v] : params) out.push_back(k);
  return out;
}

std::string digits(std::size_t i) { return std::to_string(i + 1); }

// Opaque head applied to the first-order invariants.
Expr head(const std::string& name, const std::vector<Expr>& args) {
  return args.empty() ? make_apply(name, {Expr(0)}) : make_apply(name, args);
}

void require_nonsingular(const std::vector<VectorField>& xi, const std::string& label, const SamplerConfig& s) {
  if (is_zero(field_determinant(xi), s))
    throw SingularRealization("det of the generator matrix of " + label + " vanishes");
}

}  // namespace

const char* pipeline_tag(PipelineKind k) { return k == PipelineKind::I ? "I" : "II"; }

std::vector<Expr> InvariantSet::exprs() const {
  std::vector<Expr> out;
  for (const auto& i : invariants) out.push_back(i.expr);
  return out;
}

std::vector<Expr> InvariantSet::first_order_exprs() const {
  std::vector<Expr> out;
  for (std::size_t i = 0; i < first_order; ++i) out.push_back(invariants[i].expr);
  return out;
}

std::vector<VectorField> fields_on_scalar_space(const JetSpace& scalar, const std::vector<VectorField>& fields) {
  std::vector<VectorField> out;
  for (const auto& f : fields) {
    if (f.size() != scalar.dim() + 1) throw ContextMismatch("transitive field has the wrong number of components");
    const Symbol last = f.coordinates().back();
    Bindings b{{last, Expr(scalar.dependent())}};
    std::vector<Symbol> coords = scalar.independents();
    coords.push_back(scalar.dependent());
    std::vector<Expr> cs;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i < scalar.dim() && f.coordinates()[i] != scalar.independent(i))
        throw ContextMismatch("field coordinate '" + f.coordinates()[i].name() + "' does not match '" +
                              scalar.independent(i).name() + "'");
      cs.push_back(substitute(f[i], b));
    }
    out.emplace_back(std::move(coords), std::move(cs));
  }
  return out;
}

std::vector<Expr> eliminate_w(const JetSpace& w, const std::vector<Expr>& inputs, const SamplerConfig& s) {
  const std::size_t n = w.dim() - 1;
  std::vector<Symbol> eliminated{w.jet(n), w.jet(n, n)};
  for (std::size_t a = 0; a < n; ++a) eliminated.push_back(w.jet(a, n));
  Bindings gauge{{w.jet(n), Expr(1)}, {w.jet(n, n), Expr(0)}};
  for (std::size_t a = 0; a < n; ++a) gauge.emplace(w.jet(a, n), Expr(0));

  std::vector<Expr> out;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const Expr& e = inputs[k];
    for (Symbol sym : free_symbols(e)) {
      if (sym == w.dependent() || (sym.is_jet() && sym.dependent() == w.dependent_name() &&
                                   std::find(eliminated.begin(), eliminated.end(), sym) == eliminated.end()))
        throw ResidualDependence("input " + digits(k) + " still depends on " + sym.name());
    }
    for (Symbol sym : eliminated) {
      if (depends_on(e, sym) && !is_zero(diff(e, sym), s))
        throw ResidualDependence("input " + digits(k) + " depends on " + sym.name());
    }
    out.push_back(trig_normal_form(substitute(e, gauge)));
  }
  return out;
}

PDETemplate emit_equation(const InvariantSet& inv) {
  const std::vector<Expr> args = inv.first_order_exprs();
  PDETemplate t;
  t.form = inv.pipeline == PipelineKind::I ? "quasi-linear type I" : "quasi-linear type II";
  std::vector<Expr> terms;
  for (std::size_t i = inv.first_order; i < inv.invariants.size(); ++i) {
    const auto& [label, e] = inv.invariants[i];
    if (i == inv.first_order) {
      terms.push_back(e);
      continue;
    }
    // Head name from the label's index part: "v_13" -> a13, "u_(12)" -> b12.
    std::string idx;
    for (char c : label)
      if (std::isdigit(static_cast<unsigned char>(c))) idx += c;
    std::string name;
    if (inv.pipeline == PipelineKind::II) {
      name = "a" + idx;
    } else if (label.find('(') == std::string::npos) {
      name = "a" + (idx.empty() ? std::string("11") : idx);
    } else if (label.back() == ')') {
      name = "b" + idx;
    } else {
      name = "c" + idx;
    }
    t.heads.push_back(name);
    terms.push_back(head(name, args) * e);
  }
  const std::string free_term = inv.pipeline == PipelineKind::I ? "d" : "b";
  t.heads.push_back(free_term);
  terms.push_back(head(free_term, args));
  t.lhs = make_add(std::move(terms));
  return t;
}

PipelineResult type2_pipeline(const AlgebraEntry& entry, const SamplerConfig& s) {
  const InvariantFields& f = entry.transitive;
  const std::size_t n = f.coordinates.size();
  if (n < 2) throw Error("invariants", "type II needs an algebra of dimension at least 2");
  require_nonsingular(f.xi, entry_label(entry), s);

  const auto pnames = param_names(entry.params);
  const JetSpace w(names_of(f.coordinates), "w", {}, pnames);
  std::vector<std::string> scalar_coords = names_of(f.coordinates);
  const std::string dep = scalar_coords.back();
  scalar_coords.pop_back();
  const JetSpace u(scalar_coords, dep, {}, pnames);

  // Hatted first and second-order invariants of w.
  std::vector<Expr> w1(n);
  for (std::size_t i = 0; i < n; ++i) w1[i] = symmetrized_invariant(w, f.eta, {i});
  auto w2 = [&](std::size_t i, std::size_t j) { return symmetrized_invariant(w, f.eta, {i, j}); };

  std::vector<Expr> raw;
  std::vector<std::string> labels;
  const Expr wn = w1[n - 1];
  for (std::size_t a = 0; a + 1 < n; ++a) {
    raw.push_back(w1[a] / wn);
    labels.push_back("v_" + digits(a));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Expr num = make_pow(w1[i], 2) * w2(j, j) - Expr(2) * w1[i] * w1[j] * w2(i, j) +
                       make_pow(w1[j], 2) * w2(i, i);
      raw.push_back(num / make_pow(wn, 3));
      labels.push_back("v_" + digits(i) + digits(j));
    }
  }

  // w_a = -u_a w_n, w_ab = -w_n u_ab - w_bn u_a - w_an u_b - u_a u_b w_nn, z^n = u.
  const std::size_t m = n - 1;
  const Expr wnn(w.jet(m)), wnnn(w.jet(m, m));
  Bindings epod{{w.independent(m), Expr(u.dependent())}};
  for (std::size_t a = 0; a < m; ++a) {
    epod.emplace(w.jet(a), -(Expr(u.jet(a)) * wnn));
    for (std::size_t b = a; b < m; ++b) {
      const Expr ua(u.jet(a)), ub(u.jet(b));
      epod.emplace(w.jet(a, b), -(wnn * Expr(u.jet(a, b))) - Expr(w.jet(b, m)) * ua -
                                    Expr(w.jet(a, m)) * ub - ua * ub * wnnn);
    }
  }
  std::vector<Expr> substituted;
  for (const auto& e : raw) substituted.push_back(substitute(e, epod));
  const std::vector<Expr> v = eliminate_w(w, substituted, s);

  InvariantSet set{entry_label(entry), entry.params, PipelineKind::II, 0, u,
                   fields_on_scalar_space(u, f.xi), {}, m, false};
  for (std::size_t k = 0; k < v.size(); ++k) set.invariants.push_back({labels[k], v[k]});
  PDETemplate t = emit_equation(set);
  return {std::move(set), std::move(t)};
}

PipelineResult type2_pipeline(const StructureConstants& c, const std::string& name, const SamplerConfig& s) {
  AlgebraEntry e;
  e.name = name;
  e.constants = c;
  e.transitive = build_invariant_fields(c, transitive_coordinates(static_cast<std::size_t>(c.dim())), s);
  return type2_pipeline(e, s);
}

PipelineResult type1_pipeline(const AlgebraEntry& entry, int m, const SamplerConfig& s) {
  if (m < 1) throw Error("invariants", "type I needs m >= 1");
  const InvariantFields& f = entry.free;
  const std::size_t n = f.coordinates.size();
  require_nonsingular(f.xi, entry_label(entry), s);

  std::vector<std::string> ys;
  if (m == 2) {
    ys.push_back("y");
  } else {
    for (int mu = 1; mu < m; ++mu) ys.push_back("y" + std::to_string(mu));
  }
  const JetSpace j(names_of(f.coordinates), "u", ys, param_names(entry.params));
  const std::vector<Symbol> y = j.invariant();
  const std::size_t k = y.size();

  InvariantSet set{entry_label(entry), entry.params, PipelineKind::I, m, j, f.xi, {}, 0, false};
  auto add = [&](std::string label, Expr e) { set.invariants.push_back({std::move(label), std::move(e)}); };

  // Coordinates of y^mu sit after the n base coordinates.
  auto y_jet = [&](std::size_t mu) { return j.jet(n + mu); };
  auto u_i = [&](std::size_t i) { return symmetrized_invariant(j, f.eta, {i}); };

  for (std::size_t mu = 0; mu < k; ++mu) add(y[mu].name(), Expr(y[mu]));
  add(j.dependent_name(), Expr(j.dependent()));
  for (std::size_t mu = 0; mu < k; ++mu) add(y_jet(mu).name(), Expr(y_jet(mu)));
  std::vector<Expr> first(n);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = u_i(i);
    add("u_(" + digits(i) + ")", first[i]);
  }
  set.first_order = set.invariants.size();

  for (std::size_t mu = 0; mu < k; ++mu)
    for (std::size_t nu = mu; nu < k; ++nu) add(j.jet(n + mu, n + nu).name(), Expr(j.jet(n + mu, n + nu)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = i; jj < n; ++jj) add("u_(" + digits(i) + digits(jj) + ")", symmetrized_invariant(j, f.eta, {i, jj}));
  for (std::size_t mu = 0; mu < k; ++mu)
    for (std::size_t i = 0; i < n; ++i)
      add("u_(" + digits(i) + ")" + y[mu].name(), total_derivative(j, first[i], n + mu));

  PDETemplate t = emit_equation(set);
  return {std::move(set), std::move(t)};
}

nlohmann::json to_json(const PipelineResult& r, std::uint64_t seed) {
  const InvariantSet& s = r.set;
  nlohmann::json j;
  j["algebra"] = s.algebra;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : s.params) params[k] = to_string(v);
  j["params"] = params;
  j["pipeline"] = pipeline_tag(s.pipeline);
  if (s.pipeline == PipelineKind::I) j["m"] = s.m;
  j["coordinates"] = names_of(s.space.independents());
  j["dependent"] = s.space.dependent_name();
  nlohmann::json inv = nlohmann::json::array();
  for (const auto& [label, e] : s.invariants) inv.push_back({{"label", label}, {"expr", render(e)}});
  j["invariants"] = inv;
  j["template"] = render(r.equation.lhs) + " = 0";
  j["heads"] = r.equation.heads;
  j["verified"] = s.verified;
  j["seed"] = seed;
  return j;
}

}  // namespace lieinv
