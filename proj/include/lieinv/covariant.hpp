#pragma once

#include "lieinv/eval.hpp"
#include "lieinv/jet.hpp"

#include <string>
#include <vector>

namespace lieinv {

/// E(x, u, u_a, u_ab) = 0 over independents x^1..x^{n-1} and dependent u.
struct ScalarPDE {
  JetSpace space;
  Expr lhs;
};

/// E~(z, w_i, w_ij) = 0 over z = (x^1..x^{n-1}, u) with dependent w.
/// `kappa` is the power of w_n multiplied through when the form was produced
/// by to_covariant.
struct CovariantPDE {
  JetSpace space;
  Expr lhs;
  int kappa = 0;
};

/// Covariant context for a scalar one: the dependent becomes the last
/// coordinate and `w` the new dependent.
JetSpace covariant_space(const JetSpace& scalar, const std::string& dependent = "w");
/// Inverse of covariant_space.
JetSpace scalar_space(const JetSpace& covariant);

/// u_a = -w_a/w_n, u_ab = -w_ab/w_n + (w_na w_b + w_nb w_a)/w_n^2 - w_a w_b w_nn/w_n^3,
/// then multiplied by the least power of w_n that clears top-level denominators.
CovariantPDE to_covariant(const ScalarPDE& e);

struct RescaleReport {
  bool pass = false;
  bool homogeneous = false;
  Rational degree = 0;
  std::vector<bool> annihilated;  // R_j lhs == 0, per j
};

/// Gauge w_n = 1, w_an = w_nn = 0, w_a = -u_a, w_ab = -u_ab on a rescale
/// invariant form. Throws NotRescaleInvariant.
ScalarPDE from_covariant(const CovariantPDE& t, const SamplerConfig& s = {});

/// D = sum_i w_i d/dw_i + sum_{i<=j} w_ij d/dw_ij.
Expr euler_operator(const JetSpace& w, const Expr& e);
/// R_j = sum_i (1 + delta_ij) w_i d/dw_ij, j 0-based.
Expr rescale_operator(const JetSpace& w, std::size_t j, const Expr& e);

/// k with D lhs = k lhs, fitted at 8 sample points. Throws NotHomogeneous.
Rational homogeneity_degree(const CovariantPDE& t, const SamplerConfig& s = {});

RescaleReport rescale_invariance_check(const CovariantPDE& t, const SamplerConfig& s = {});

struct JInvariants {
  std::vector<std::string> labels_first, labels_second;
  std::vector<Expr> first;             // J_i = w_i
  std::vector<Expr> second;            // J_ij, i < j
  std::vector<Expr> normalized_first;  // w_i / w_n, i < n
  std::vector<Expr> normalized_second; // J_ij / w_n^3
};

JInvariants J_invariants(const JetSpace& w);

/// "coords: x,y; dep: u" followed by "lhs: <expr>". Parameters may be
/// declared with an optional "params: h,p" clause on the first line.
struct PDEFile {
  JetSpace space;
  Expr lhs;
};
PDEFile read_pde(const std::string& text);
PDEFile read_pde_file(const std::string& path);

}  // namespace lieinv
