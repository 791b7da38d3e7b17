#pragma once

#include "support/oracles.hpp"

#include <string>

namespace oracle {

struct PropertyResult {
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
};

// Symbolic derivative against central differences (rel. tol 1e-5) on
// `count` generated expressions, every variable, three points each.
inline PropertyResult diff_vs_finite_differences(int count, std::uint64_t seed = 20240601) {
  ExprGen gen(seed);
  PropertyResult r;
  for (int n = 0; n < count; ++n) {
    const Expr e = gen(4);
    for (Symbol s : gen.symbols()) {
      const Expr d = lieinv::diff(e, s);
      for (int k = 0; k < 3; ++k) {
        const lieinv::Assignment a = gen.point();
        const double exact = lieinv::eval_numeric(d, a);
        const double fd = fd_derivative(e, s, a);
        r.record(close(exact, fd, 1e-5), "d/d" + s.name() + " " + lieinv::render(e) + ": " +
                                             std::to_string(exact) + " vs " + std::to_string(fd));
      }
    }
  }
  return r;
}

// Linearity, product rule and substitution on `count` generated pairs,
// compared numerically at two points each.
inline PropertyResult kernel_pair_properties(int count, std::uint64_t seed = 77) {
  ExprGen gen(seed);
  const Symbol x = gen.symbols()[0], y = gen.symbols()[1];
  PropertyResult r;
  for (int n = 0; n < count; ++n) {
    const Expr f = gen(3), g = gen(3);
    const Expr c(lieinv::Rational(gen.pick(9) - 4, 1 + gen.pick(4)));
    const Expr lin = lieinv::diff(c * f + g, x);
    const Expr prod = lieinv::diff(f * g, x);
    const Expr fx = lieinv::diff(f, x), gx = lieinv::diff(g, x);
    const Expr sub = lieinv::substitute(f, {{y, g}});
    const std::string pair = lieinv::render(f) + " | " + lieinv::render(g);
    for (int k = 0; k < 2; ++k) {
      lieinv::Assignment a = gen.point();
      auto ev = [&](const Expr& e) { return lieinv::eval_numeric(e, a); };
      r.record(close(ev(lin), ev(c) * ev(fx) + ev(gx), 1e-9), "linearity: " + pair);
      r.record(close(ev(prod), ev(fx) * ev(g) + ev(f) * ev(gx), 1e-9), "product rule: " + pair);
      const double subbed = ev(sub);
      a[y] = ev(g);
      r.record(close(subbed, ev(f), 1e-9), "substitution: " + pair);
    }
  }
  return r;
}

}  // namespace oracle
