#pragma once

// Independent reference computations used by the unit tests and the
// acceptance binary. Nothing here calls the library's simplifier or calculus
// beyond building and evaluating expressions.

#include "lieinv/covariant.hpp"
#include "lieinv/eval.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/liealg.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using lieinv::Expr;
using lieinv::Symbol;

// ---------------------------------------------------------------------------
// Random expressions over three coordinates.

class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed)
      : rng_(seed), syms_{Symbol::coordinate("x"), Symbol::coordinate("y"), Symbol::coordinate("z")} {}

  const std::vector<Symbol>& symbols() const { return syms_; }

  Expr operator()(int depth) {
    if (depth == 0 || pick(5) == 0) return leaf();
    switch (pick(8)) {
      case 0:
      case 1: return (*this)(depth - 1) + (*this)(depth - 1);
      case 2:
      case 3: return (*this)(depth - 1) * (*this)(depth - 1);
      case 4: return lieinv::pow((*this)(depth - 1), lieinv::Rational(2 + pick(2)));
      case 5: return lieinv::sin((*this)(depth - 1));
      case 6: return lieinv::exp(Expr(lieinv::Rational(1, 2)) * (*this)(depth - 1));
      default: {
        const Expr d = (*this)(depth - 1);
        return (*this)(depth - 1) / (Expr(2) + d * d);
      }
    }
  }

  lieinv::Assignment point() {
    lieinv::Assignment a;
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (Symbol s : syms_) a[s] = u(rng_);
    return a;
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  Expr leaf() {
    if (pick(3) == 0) return Expr(lieinv::Rational(pick(7) - 3, 1 + pick(3)));
    return Expr(syms_[static_cast<std::size_t>(pick(3))]);
  }

  std::mt19937_64 rng_;
  std::vector<Symbol> syms_;
};

// Central difference of e along s at a.
inline double fd_derivative(const Expr& e, Symbol s, lieinv::Assignment a, double h = 1e-5) {
  const double x0 = a[s];
  a[s] = x0 + h;
  const double plus = lieinv::eval_numeric(e, a);
  a[s] = x0 - h;
  return (plus - lieinv::eval_numeric(e, a)) / (2 * h);
}

inline bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

// ---------------------------------------------------------------------------
// Brute-force Jacobi scan: first (i, j, k, l), i < j < k, l ascending, with a
// nonzero e_l component of [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].

struct Quadruple {
  int i = 0, j = 0, k = 0, l = 0;
  bool found = false;
};

inline Quadruple jacobi_scan(const lieinv::StructureConstants& c) {
  const int n = c.dim();
  auto term = [&](int a, int b, int d, int l) {
    lieinv::Rational s = 0;
    for (int m = 1; m <= n; ++m) s += c.get(b, d, m) * c.get(a, m, l);
    return s;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          if (term(i, j, k, l) + term(j, k, i, l) + term(k, i, j, l) != 0) return {i, j, k, l, true};
  return {};
}

// ---------------------------------------------------------------------------
// Matrix exponential by truncated Taylor series.

inline std::vector<std::vector<double>> exp_series(const std::vector<std::vector<lieinv::Rational>>& m, double t) {
  const std::size_t n = m.size();
  std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0)), term(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = term[i][i] = 1.0;
  for (int k = 1; k < 60; ++k) {
    std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i][j] += term[i][l] * lieinv::to_double(m[l][j]) * t / k;
    term = next;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += term[i][j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// so(3) first-order invariants on (x, y; u), written out by hand.

inline double so3_v1(double y, double u, double ux, double uy) {
  return ux * std::cos(u) / std::cos(y) - uy * std::sin(u) - std::cos(u) * std::tan(y);
}
inline double so3_v2(double y, double u, double ux, double uy) {
  return ux * std::sin(u) / std::cos(y) + uy * std::cos(u) - std::sin(u) * std::tan(y);
}

// ---------------------------------------------------------------------------
// Scalar PDE battery for the covariant-form properties.

struct BatteryPDE {
  std::string name;
  std::string text;  // PDE file contents
};

inline std::vector<BatteryPDE> pde_battery() {
  return {
      {"transport", "coords: x,y; dep: u\nlhs: a1(x,y,u)*u_x + a2(x,y,u)*u_y + b(x,y,u)\n"},
      {"quadratic first order",
       "coords: x,y; dep: u\nlhs: g11(x,y,u)*u_x^2 + 2*g12(x,y,u)*u_x*u_y + g22(x,y,u)*u_y^2 + b(x,y,u)\n"},
      {"metric", "coords: x,y; dep: u\n"
                 "lhs: g11(x,y,u)*u_x^2 + 2*g12(x,y,u)*u_x*u_y + g22(x,y,u)*u_y^2 - 2*g13(x,y,u)*u_x - "
                 "2*g23(x,y,u)*u_y + g33(x,y,u)\n"},
      {"u_xx + b(u_x)", "coords: x; dep: u\nlhs: u_xx + b(u_x)\n"},
      {"heat", "coords: t,x; dep: u\nlhs: u_t - u_xx\n"},
      {"laplace", "coords: x,y; dep: u\nlhs: u_xx + u_yy\n"},
      {"burgers", "coords: t,x; dep: u\nlhs: u_t + u*u_x - u_xx\n"},
      {"monge-ampere", "coords: x,y; dep: u\nlhs: u_xx*u_yy - u_xy^2 - f(x,y)\n"},
      {"minimal surface", "coords: x,y; dep: u\nlhs: (1 + u_y^2)*u_xx - 2*u_x*u_y*u_xy + (1 + u_x^2)*u_yy\n"},
      {"g2 template", "coords: x; dep: u\nlhs: u_xx + u_x^2 + exp(-2*u)*b(exp(u)*u_x)\n"},
  };
}

}  // namespace oracle
