#include "lieinv/verify.hpp"

#include "lieinv/error.hpp"

#include <algorithm>
#include <cmath>

namespace lieinv {

namespace {

constexpr double kStep = 1e-6;
constexpr double kRankThreshold = 1e-9;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Small nonzero integer in [-range, range].
int draw(std::uint64_t& state, int range) {
  state = mix(state);
  const int v = static_cast<int>(state % static_cast<std::uint64_t>(2 * range)) - range;
  return v >= 0 ? v + 1 : v;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int rank_of(std::vector<std::vector<double>> a) {
  for (auto& row : a) {
    double mx = 0;
    for (double v : row) mx = std::max(mx, std::abs(v));
    if (mx > 0)
      for (double& v : row) v /= mx;
  }
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<bool> used_row(rows, false), used_col(cols, false);
  double largest = 0;
  int rank = 0;
  for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
    double best = 0;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (used_row[r]) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (!used_col[c] && std::abs(a[r][c]) > best) {
          best = std::abs(a[r][c]);
          br = r;
          bc = c;
        }
      }
    }
    if (step == 0) largest = best;
    if (best == 0 || best <= kRankThreshold * largest) break;
    used_row[br] = used_col[bc] = true;
    ++rank;
    for (std::size_t r = 0; r < rows; ++r) {
      if (used_row[r]) continue;
      const double f = a[r][bc] / a[br][bc];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[br][c];
    }
  }
  return rank;
}

}  // namespace

std::vector<ProlongedField> prolong_all(const JetSpace& j, const std::vector<VectorField>& generators) {
  std::vector<ProlongedField> out;
  for (const auto& x : generators) out.push_back(prolong2(j, x));
  return out;
}

bool annihilation_check(const JetSpace& j, const std::vector<ProlongedField>& pro, const Expr& e,
                        const SamplerConfig& s) {
  return std::all_of(pro.begin(), pro.end(), [&](const ProlongedField& p) { return is_zero(p.apply(j, e), s); });
}

bool equation_invariance_check(const JetSpace& j, const std::vector<ProlongedField>& pro, const Expr& lhs,
                               Symbol leading, const SamplerConfig& s) {
  const Expr c = diff(lhs, leading);
  if (is_zero(c, s)) throw Error("verify", "equation does not involve " + leading.name());
  const Bindings on_equation{{leading, Expr(leading) - lhs / c}};
  return std::all_of(pro.begin(), pro.end(), [&](const ProlongedField& p) {
    return is_zero(substitute(p.apply(j, lhs), on_equation), s);
  });
}

int functional_rank(const JetSpace& j, const std::vector<Expr>& es, const SamplerConfig& s) {
  if (es.empty()) return 0;
  const std::vector<Symbol> columns = j.all_symbols();
  auto syms = free_symbols(es);
  syms.insert(columns.begin(), columns.end());
  std::set<Symbol, SymbolLess> dens;
  for (const auto& e : es) {
    auto d = denominator_symbols(e);
    dens.insert(d.begin(), d.end());
  }
  int best = 0;
  int regular = 0;
  for (int p = 0; p < s.points; ++p) {
    for (int attempt = 0; attempt < s.attempts; ++attempt) {
      Assignment a = sample_point(s, syms, dens, p, attempt);
      try {
        std::vector<std::vector<double>> jac(es.size(), std::vector<double>(columns.size()));
        for (std::size_t c = 0; c < columns.size(); ++c) {
          const double x0 = a[columns[c]];
          a[columns[c]] = x0 + kStep;
          std::vector<double> plus;
          for (const auto& e : es) plus.push_back(eval_numeric(e, a));
          a[columns[c]] = x0 - kStep;
          for (std::size_t r = 0; r < es.size(); ++r)
            jac[r][c] = (plus[r] - eval_numeric(es[r], a)) / (2 * kStep);
          a[columns[c]] = x0;
        }
        best = std::max(best, rank_of(std::move(jac)));
        ++regular;
        break;
      } catch (const SingularEvaluation&) {
      }
    }
  }
  if (regular == 0) throw Unsampleable("no regular point for the Jacobian");
  return best;
}

Equivalence equivalence(const JetSpace& j, const std::vector<Expr>& a, const std::vector<Expr>& b,
                        const SamplerConfig& s) {
  std::vector<Expr> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return {functional_rank(j, a, s), functional_rank(j, b, s), functional_rank(j, both, s)};
}

bool equivalence_check(const JetSpace& j, const std::vector<Expr>& a, const std::vector<Expr>& b,
                       const SamplerConfig& s) {
  return equivalence(j, a, b, s).equivalent();
}

bool verify_invariant_set(InvariantSet& inv, const SamplerConfig& s) {
  const auto pro = prolong_all(inv.space, inv.generators);
  bool ok = true;
  for (const auto& li : inv.invariants) ok = ok && annihilation_check(inv.space, pro, li.expr, s);
  ok = ok && functional_rank(inv.space, inv.exprs(), s) == static_cast<int>(inv.invariants.size());
  inv.verified = ok;
  return ok;
}

Expr instantiate_heads(const Expr& e, std::uint64_t seed, int k) {
  std::map<std::string, HeadBuilder> builders;
  for (const auto& name : head_names(e)) {
    std::uint64_t state = seed ^ mix(fnv1a(name)) ^ mix(static_cast<std::uint64_t>(k) + 1);
    builders[name] = [state](std::span<const Expr> args) mutable {
      std::uint64_t st = state;
      std::vector<Expr> terms{Expr(Rational(draw(st, 4), 2))};
      for (const auto& a : args) terms.push_back(Expr(Rational(draw(st, 4), 3)) * a);
      if (!args.empty()) terms.push_back(Expr(Rational(draw(st, 3), 4)) * make_pow(args[0], 2));
      if (args.size() > 1) terms.push_back(Expr(Rational(draw(st, 3), 5)) * args[0] * args[1]);
      return make_add(std::move(terms));
    };
  }
  return replace_heads(e, builders);
}

Expr mutate(const Expr& e, const std::vector<VectorField>& generators, std::uint64_t seed, int k) {
  std::uint64_t state = seed ^ mix(static_cast<std::uint64_t>(k) * 7919 + 17);
  std::vector<Symbol> coords;
  for (const auto& x : generators)
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero_const() && std::find(coords.begin(), coords.end(), x.coordinates()[i]) == coords.end())
        coords.push_back(x.coordinates()[i]);
  if (coords.empty()) throw Error("verify", "generators move no coordinate");
  state = mix(state);
  const Symbol z = coords[(state >> 7) % coords.size()];
  const int c = draw(state, 3);
  return e * (Expr(1) + Expr(Rational(c, 10)) * Expr(z));
}

std::vector<NegativeControl> negative_controls(const SamplerConfig& s) {
  std::vector<NegativeControl> out;
  for (const auto& name : catalog_names()) {
    const AlgebraEntry entry = catalog_lookup(name, {}, s);
    const PipelineResult r = entry.free.coordinates.size() >= 2 ? type2_pipeline(entry, s) : type1_pipeline(entry, 1, s);
    const auto pro = prolong_all(r.set.space, r.set.generators);
    NegativeControl nc;
    nc.algebra = r.set.algebra;
    nc.pass = true;
    for (int k = 0; k < 3; ++k) {
      const Expr& base = r.set.invariants[static_cast<std::size_t>(k) % r.set.invariants.size()].expr;
      const Expr bad = mutate(base, r.set.generators, s.seed, k);
      const bool rejected = !annihilation_check(r.set.space, pro, bad, s);
      nc.mutated.push_back(render(bad));
      nc.rejected.push_back(rejected);
      nc.pass = nc.pass && rejected;
    }
    out.push_back(std::move(nc));
  }
  return out;
}

}  // namespace lieinv
