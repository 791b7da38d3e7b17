#include "lieinv/error.hpp"
#include "lieinv/eval.hpp"

#include <cmath>

namespace lieinv {

namespace {

constexpr double kSingular = 1e-12;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit(std::uint64_t& state) {
  return static_cast<double>(splitmix(state) >> 11) * 0x1.0p-53;
}

[[noreturn]] void singular(const Expr& at) { throw SingularEvaluation(render(at)); }

double finite_or_throw(double v, const Expr& at) {
  if (!std::isfinite(v)) singular(at);
  return v;
}

double fractional_pow(double b, const Rational& q, const Expr& at) {
  const double qd = to_double(q);
  if (is_integer(q)) return std::pow(b, qd);
  if (b >= 0) return std::pow(b, qd);
  if (denominator(q) % 2 == 0) singular(at);
  const double mag = std::pow(-b, qd);
  return numerator(q) % 2 == 0 ? mag : -mag;
}

class Evaluator {
 public:
  explicit Evaluator(const Assignment& a) : a_(a) {}

  Evaluated run(const Expr& e) {
    if (auto it = memo_.find(e.get()); it != memo_.end()) return it->second;
    Evaluated r = compute(e);
    memo_.emplace(e.get(), r);
    return r;
  }

 private:
  Evaluated compute(const Expr& e) {
    switch (e.kind()) {
      case ExprKind::Const: {
        const double v = e.node().dvalue;
        return {v, std::abs(v)};
      }
      case ExprKind::Sym: {
        auto it = a_.find(e.symbol());
        if (it == a_.end()) throw UnboundSymbol(e.symbol().name());
        return {it->second, std::abs(it->second)};
      }
      case ExprKind::Add: {
        double v = 0, m = 0;
        for (const auto& t : e.args()) {
          auto r = run(t);
          v += r.value;
          m += r.magnitude;
        }
        return {finite_or_throw(v, e), m};
      }
      case ExprKind::Mul: {
        double v = 1, m = 1;
        for (const auto& f : e.args()) {
          auto r = run(f);
          v *= r.value;
          m *= r.magnitude;
        }
        return {finite_or_throw(v, e), m};
      }
      case ExprKind::Pow: {
        auto b = run(e.args()[0]);
        const Rational& q = e.node().number;
        if (q < 0 && std::abs(b.value) < kSingular) singular(e);
        const double v = finite_or_throw(fractional_pow(b.value, q, e), e);
        const double qd = to_double(q);
        double m;
        if (q > 0) {
          m = std::pow(b.magnitude, qd);
        } else {
          m = std::abs(v) * (1.0 + std::abs(qd) * b.magnitude / std::abs(b.value));
        }
        return {v, m};
      }
      case ExprKind::Func: {
        auto a = run(e.args()[0]);
        const double x = a.value;
        double v = 0, dv = 0;
        switch (e.node().fn) {
          case Fn::Exp:
            v = std::exp(x);
            dv = v;
            break;
          case Fn::Log:
            if (x <= kSingular) singular(e);
            v = std::log(x);
            dv = 1.0 / x;
            break;
          case Fn::Sin:
            v = std::sin(x);
            dv = std::cos(x);
            break;
          case Fn::Cos:
            v = std::cos(x);
            dv = std::sin(x);
            break;
          case Fn::Tan: {
            const double c = std::cos(x);
            if (std::abs(c) < kSingular) singular(e);
            v = std::sin(x) / c;
            dv = 1.0 + v * v;
            break;
          }
        }
        finite_or_throw(v, e);
        return {v, std::abs(v) + std::abs(dv) * a.magnitude};
      }
      case ExprKind::Apply: {
        std::vector<double> xs;
        double m = 0;
        for (const auto& arg : e.args()) {
          auto r = run(arg);
          xs.push_back(r.value);
          m += r.magnitude;
        }
        const double v = finite_or_throw(head_value(e.node().head, xs, e.node().deriv), e);
        return {v, std::abs(v) + m};
      }
    }
    return {};
  }

  const Assignment& a_;
  std::unordered_map<const Node*, Evaluated> memo_;
};

}  // namespace

double eval_numeric(const Expr& e, const Assignment& a) { return Evaluator(a).run(e).value; }

Evaluated eval_with_magnitude(const Expr& e, const Assignment& a) { return Evaluator(a).run(e); }

double head_value(const std::string& head, std::span<const double> x, std::span<const int> deriv) {
  const std::size_t n = x.size();
  std::uint64_t state = fnv1a(head);
  auto coeff = [&] { return 2.0 * unit(state) - 1.0; };

  // Monomials of degree <= 2 with exponent vectors, then c*sin(d.x).
  struct Mono {
    double c;
    std::vector<int> pow;
  };
  std::vector<Mono> monos;
  monos.push_back({coeff(), std::vector<int>(n, 0)});
  for (std::size_t i = 0; i < n; ++i) {
    Mono m{coeff(), std::vector<int>(n, 0)};
    m.pow[i] = 1;
    monos.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Mono m{coeff(), std::vector<int>(n, 0)};
      ++m.pow[i];
      ++m.pow[j];
      monos.push_back(std::move(m));
    }
  }
  const double c_sin = coeff();
  std::vector<double> d(n);
  for (auto& di : d) di = 0.5 + unit(state);

  double value = 0.0;
  for (const auto& m : monos) {
    double t = m.c;
    for (std::size_t i = 0; i < n && t != 0.0; ++i) {
      const int a = deriv.empty() ? 0 : deriv[i];
      if (a > m.pow[i]) {
        t = 0.0;
        break;
      }
      for (int k = 0; k < a; ++k) t *= m.pow[i] - k;
      t *= std::pow(x[i], m.pow[i] - a);
    }
    value += t;
  }
  double phase = 0.0, scale = c_sin;
  int order = 0;
  for (std::size_t i = 0; i < n; ++i) {
    phase += d[i] * x[i];
    const int a = deriv.empty() ? 0 : deriv[i];
    scale *= std::pow(d[i], a);
    order += a;
  }
  switch (order % 4) {
    case 0: value += scale * std::sin(phase); break;
    case 1: value += scale * std::cos(phase); break;
    case 2: value -= scale * std::sin(phase); break;
    default: value -= scale * std::cos(phase); break;
  }
  return value;
}

double sample_value(const SamplerConfig& cfg, Symbol s, int point, int attempt, bool in_denominator) {
  if (auto it = cfg.fixed.find(s); it != cfg.fixed.end()) return it->second;
  std::uint64_t state = cfg.seed ^ fnv1a(s.name());
  state ^= 0xd1b54a32d192ed03ULL * static_cast<std::uint64_t>(point + 1);
  state ^= 0x8cb92ba72f3d8dd7ULL * static_cast<std::uint64_t>(attempt + 1);
  splitmix(state);
  const double u = unit(state);
  if (s.kind() == SymbolKind::Jet) {
    if (in_denominator) {
      const double mag = cfg.denom_lo + (cfg.denom_hi - cfg.denom_lo) * unit(state);
      return u < 0.5 ? -mag : mag;
    }
    return cfg.jet_range * (2.0 * u - 1.0);
  }
  return cfg.coord_range * (2.0 * u - 1.0);
}

Assignment sample_point(const SamplerConfig& cfg, const std::set<Symbol, SymbolLess>& symbols,
                        const std::set<Symbol, SymbolLess>& denominators, int point, int attempt) {
  Assignment a;
  for (Symbol s : symbols) a[s] = sample_value(cfg, s, point, attempt, denominators.count(s) > 0);
  return a;
}

ZeroTest zero_test(const Expr& e, const SamplerConfig& cfg) {
  ZeroTest out;
  if (e.is_const()) {
    out.zero = e.is_zero_const();
    out.evaluated = 1;
    out.worst_ratio = out.zero ? 0.0 : 1.0;
    return out;
  }
  const auto syms = free_symbols(e);
  const auto dens = denominator_symbols(e);
  for (int p = 0; p < cfg.points; ++p) {
    bool done = false;
    for (int attempt = 0; attempt < cfg.attempts && !done; ++attempt) {
      try {
        const auto r = eval_with_magnitude(e, sample_point(cfg, syms, dens, p, attempt));
        done = true;
        ++out.evaluated;
        const double ratio = r.magnitude > 0 ? std::abs(r.value) / r.magnitude
                                             : (r.value == 0 ? 0.0 : INFINITY);
        out.worst_ratio = std::max(out.worst_ratio, ratio);
        if (std::abs(r.value) > cfg.tol * r.magnitude) out.zero = false;
      } catch (const SingularEvaluation&) {
      }
    }
    if (!done) ++out.singular;
  }
  if (out.evaluated == 0) throw Unsampleable("every sample point of '" + render(e) + "' is singular");
  return out;
}

bool is_zero(const Expr& e, const SamplerConfig& cfg) { return zero_test(e, cfg).zero; }

std::vector<std::vector<double>> sample_values(std::span<const Expr> es, const SamplerConfig& cfg,
                                               std::vector<Assignment>* points) {
  const auto syms = free_symbols(es);
  std::set<Symbol, SymbolLess> dens;
  for (const auto& e : es) {
    auto d = denominator_symbols(e);
    dens.insert(d.begin(), d.end());
  }
  std::vector<std::vector<double>> rows;
  for (int p = 0; p < cfg.points; ++p) {
    for (int attempt = 0; attempt < cfg.attempts; ++attempt) {
      Assignment a = sample_point(cfg, syms, dens, p, attempt);
      try {
        std::vector<double> row;
        row.reserve(es.size());
        for (const auto& e : es) row.push_back(eval_numeric(e, a));
        rows.push_back(std::move(row));
        if (points) points->push_back(std::move(a));
        break;
      } catch (const SingularEvaluation&) {
      }
    }
  }
  if (rows.empty()) throw Unsampleable("no regular sample point for the given expressions");
  return rows;
}

}  // namespace lieinv
