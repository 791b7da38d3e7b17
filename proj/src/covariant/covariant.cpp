#include "lieinv/covariant.hpp"

#include "lieinv/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace lieinv {

namespace {

std::vector<std::string> names_of(const std::vector<Symbol>& syms) {
  std::vector<std::string> out;
  for (Symbol s : syms) out.push_back(s.name());
  return out;
}

std::vector<std::string> param_names(const JetSpace& j) { return names_of(j.parameters()); }

// Largest k such that w_n^-k divides some top-level term of the expansion.
int clearing_power(const Expr& expanded, Symbol wn) {
  int kappa = 0;
  const std::vector<Expr> terms =
      expanded.kind() == ExprKind::Add ? expanded.args() : std::vector<Expr>{expanded};
  for (const auto& t : terms) {
    const std::vector<Expr> factors = t.kind() == ExprKind::Mul ? t.args() : std::vector<Expr>{t};
    for (const auto& f : factors) {
      if (f.kind() == ExprKind::Pow && f.args()[0].kind() == ExprKind::Sym &&
          f.args()[0].symbol() == wn && f.node().number < 0) {
        const Rational q = -f.node().number;
        const Integer ceil_q = (numerator(q) + denominator(q) - 1) / denominator(q);
        kappa = std::max(kappa, ceil_q.convert_to<int>());
      }
    }
  }
  return kappa;
}

std::optional<Rational> small_rational(double v) {
  for (int q = 1; q <= 12; ++q) {
    const double p = std::round(v * q);
    if (std::abs(v - p / q) < 1e-9 * std::max(1.0, std::abs(v)))
      return Rational(static_cast<long long>(p), q);
  }
  return std::nullopt;
}

}  // namespace

JetSpace covariant_space(const JetSpace& scalar, const std::string& dependent) {
  std::vector<std::string> coords = names_of(scalar.independents());
  coords.push_back(scalar.dependent_name());
  return JetSpace(coords, dependent, {}, param_names(scalar));
}

JetSpace scalar_space(const JetSpace& covariant) {
  std::vector<std::string> coords = names_of(covariant.independents());
  if (coords.size() < 2) throw Error("covariant", "a covariant form needs at least two coordinates");
  const std::string dep = coords.back();
  coords.pop_back();
  return JetSpace(coords, dep, {}, param_names(covariant));
}

CovariantPDE to_covariant(const ScalarPDE& e) {
  const JetSpace& s = e.space;
  JetSpace w = covariant_space(s);
  const std::size_t m = s.dim();  // scalar independents; w has m + 1 coordinates
  const Expr wn(w.jet(m));
  const Expr wnn(w.jet(m, m));
  Bindings b;
  b.emplace(s.dependent(), Expr(w.independent(m)));
  for (std::size_t a = 0; a < m; ++a) {
    b.emplace(s.jet(a), -(Expr(w.jet(a)) / wn));
    for (std::size_t c = a; c < m; ++c) {
      const Expr wa(w.jet(a)), wc(w.jet(c));
      const Expr uac = -(Expr(w.jet(a, c)) / wn) +
                       (Expr(w.jet(m, a)) * wc + Expr(w.jet(m, c)) * wa) / make_pow(wn, 2) -
                       wa * wc * wnn / make_pow(wn, 3);
      b.emplace(s.jet(a, c), uac);
    }
  }
  const Expr replaced = expand(substitute(e.lhs, b));
  const int kappa = clearing_power(replaced, w.jet(m));
  return {w, expand(replaced * make_pow(wn, kappa)), kappa};
}

Expr euler_operator(const JetSpace& w, const Expr& e) {
  std::vector<Expr> terms;
  for (Symbol s : w.first_order()) terms.push_back(Expr(s) * diff(e, s));
  for (Symbol s : w.second_order()) terms.push_back(Expr(s) * diff(e, s));
  return make_add(std::move(terms));
}

Expr rescale_operator(const JetSpace& w, std::size_t j, const Expr& e) {
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const Expr d = diff(e, w.jet(i, j));
    terms.push_back(Expr(i == j ? 2 : 1) * Expr(w.jet(i)) * d);
  }
  return make_add(std::move(terms));
}

Rational homogeneity_degree(const CovariantPDE& t, const SamplerConfig& s) {
  const Expr d = euler_operator(t.space, t.lhs);
  SamplerConfig cfg = s;
  cfg.points = 8;
  const std::vector<Expr> pair{t.lhs, d};
  const auto rows = sample_values(pair, cfg);
  std::optional<double> k;
  for (const auto& r : rows) {
    if (std::abs(r[0]) < 1e-12) continue;
    const double ratio = r[1] / r[0];
    if (!k) {
      k = ratio;
    } else if (std::abs(ratio - *k) > 1e-9 * std::max(1.0, std::abs(*k))) {
      throw NotHomogeneous("D(lhs)/lhs varies between sample points (" + std::to_string(*k) + " vs " +
                           std::to_string(ratio) + ")");
    }
  }
  if (!k) throw NotHomogeneous("lhs vanishes at every sample point");
  auto q = small_rational(*k);
  if (!q) throw NotHomogeneous("degree " + std::to_string(*k) + " is not a small rational");
  return *q;
}

RescaleReport rescale_invariance_check(const CovariantPDE& t, const SamplerConfig& s) {
  RescaleReport r;
  try {
    r.degree = homogeneity_degree(t, s);
    r.homogeneous = true;
  } catch (const NotHomogeneous&) {
    r.homogeneous = false;
  }
  r.pass = r.homogeneous;
  for (std::size_t j = 0; j < t.space.dim(); ++j) {
    const bool ok = is_zero(rescale_operator(t.space, j, t.lhs), s);
    r.annihilated.push_back(ok);
    r.pass = r.pass && ok;
  }
  return r;
}

ScalarPDE from_covariant(const CovariantPDE& t, const SamplerConfig& s) {
  const auto report = rescale_invariance_check(t, s);
  if (!report.pass) {
    std::string why = report.homogeneous ? "" : "not homogeneous";
    for (std::size_t j = 0; j < report.annihilated.size(); ++j)
      if (!report.annihilated[j]) why += (why.empty() ? "" : ", ") + std::string("R_") + std::to_string(j + 1) + " lhs != 0";
    throw NotRescaleInvariant(why);
  }
  const JetSpace& w = t.space;
  JetSpace u = scalar_space(w);
  const std::size_t m = u.dim();
  Bindings b;
  b.emplace(w.independent(m), Expr(u.dependent()));
  b.emplace(w.jet(m), Expr(1));
  b.emplace(w.jet(m, m), Expr(0));
  for (std::size_t a = 0; a < m; ++a) {
    b.emplace(w.jet(a), -Expr(u.jet(a)));
    b.emplace(w.jet(a, m), Expr(0));
    for (std::size_t c = a; c < m; ++c) b.emplace(w.jet(a, c), -Expr(u.jet(a, c)));
  }
  return {u, expand(substitute(t.lhs, b))};
}

JInvariants J_invariants(const JetSpace& w) {
  JInvariants out;
  const std::size_t n = w.dim();
  const Expr wn(w.jet(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    out.first.emplace_back(w.jet(i));
    out.labels_first.push_back("J_" + std::to_string(i + 1));
    if (i + 1 < n) out.normalized_first.push_back(Expr(w.jet(i)) / wn);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Expr wi(w.jet(i)), wj(w.jet(j));
      const Expr jij = make_pow(wi, 2) * Expr(w.jet(j, j)) + make_pow(wj, 2) * Expr(w.jet(i, i)) -
                       Expr(2) * wi * wj * Expr(w.jet(i, j));
      out.second.push_back(jij);
      out.normalized_second.push_back(jij / make_pow(wn, 3));
      out.labels_second.push_back("J_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return out;
}

PDEFile read_pde(const std::string& text) {
  std::istringstream in(text);
  std::string header, body;
  auto next_line = [&](std::string& line) {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(header) || !next_line(body))
    throw Error("covariant", "PDE file needs a context line and an lhs line");

  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  auto split = [&](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
      item = trim(item);
      if (!item.empty()) parts.push_back(item);
    }
    return parts;
  };

  std::vector<std::string> coords, params;
  std::string dep;
  for (const auto& clause : split(header, ';')) {
    const auto colon = clause.find(':');
    if (colon == std::string::npos) throw Error("covariant", "malformed clause '" + clause + "'");
    const std::string key = trim(clause.substr(0, colon));
    const std::string value = trim(clause.substr(colon + 1));
    if (key == "coords") {
      coords = split(value, ',');
    } else if (key == "dep") {
      dep = value;
    } else if (key == "params") {
      params = split(value, ',');
    } else {
      throw Error("covariant", "unknown clause '" + key + "'");
    }
  }
  if (coords.empty() || dep.empty()) throw Error("covariant", "context line needs coords and dep");
  const std::string b = trim(body);
  if (b.rfind("lhs:", 0) != 0) throw Error("covariant", "second line must start with 'lhs:'");
  JetSpace space(coords, dep, {}, params);
  Expr lhs = space.parse(b.substr(4));
  return {space, lhs};
}

PDEFile read_pde_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("covariant", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_pde(ss.str());
}

}  // namespace lieinv
