#pragma once

#include "lieinv/expr.hpp"
#include "lieinv/jet.hpp"
#include "lieinv/eval.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace lieinv {

/// Structure constants C^k_ij of [e_i, e_j] = C^k_ij e_k. Indices are
/// 1-based; only i < j is stored, the rest follows by antisymmetry.
class StructureConstants {
 public:
  explicit StructureConstants(int dim = 0);

  int dim() const { return dim_; }
  void set(int i, int j, int k, const Rational& c);
  Rational get(int i, int j, int k) const;  // any i, j

  /// (ad e_k)_{mj} = C^m_{kj}, 0-based matrix.
  std::vector<std::vector<Rational>> ad(int k) const;

  /// Brackets as (i, j) -> [(k, c)], i < j, nonzero entries only.
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> brackets() const;

  /// {"dim": n, "brackets": [{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]}], "params": {...}}.
  /// "c" may name parameters ("h", "2*h"), resolved from "params" and `overrides`.
  static StructureConstants from_json(const std::string& text,
                                      const std::map<std::string, Rational>& overrides = {});
  static StructureConstants from_file(const std::string& path,
                                      const std::map<std::string, Rational>& overrides = {});

 private:
  int dim_;
  std::map<std::tuple<int, int, int>, Rational> c_;
};

/// Throws JacobiViolation with the first failing (i, j, k, l), 1-based.
void validate(const StructureConstants& c);

/// Closed-form exp(t*M) for a rational matrix whose eigenvalues are rational
/// or complex pairs a +- b*i with rational a, b. Entries are expressions in t.
/// Throws EigenvalueUnsupported otherwise.
std::vector<std::vector<Expr>> exp_matrix(const std::vector<std::vector<Rational>>& m, const Expr& t);

/// Eigenvalues of a rational matrix when they are of the supported shape.
std::vector<std::complex<double>> supported_eigenvalues(const std::vector<std::vector<Rational>>& m);

struct InvariantFields {
  std::vector<Symbol> coordinates;
  std::vector<VectorField> xi;   // left-invariant
  std::vector<VectorField> eta;  // right-invariant
};

/// Left- and right-invariant fields in second-kind coordinates
/// g = exp(z^n e_n) ... exp(z^1 e_1), with the given coordinate names
/// (z1..zn by default). Gated by verify_realization.
InvariantFields build_invariant_fields(const StructureConstants& c,
                                       std::vector<std::string> coordinate_names = {},
                                       const SamplerConfig& sampler = {});

struct PairCheck {
  std::string relation;  // e.g. "[xi_1,xi_2]"
  bool pass = false;
};

struct RealizationReport {
  bool pass = true;
  std::vector<PairCheck> pairs;
};

/// [xi_i, xi_j] = C^k_ij xi_k, [eta_i, eta_j] = -C^k_ij eta_k, [xi_i, eta_j] = 0.
RealizationReport verify_realization(const std::vector<VectorField>& xi,
                                     const std::vector<VectorField>& eta,
                                     const StructureConstants& c, const SamplerConfig& sampler = {});

/// Determinant of the coefficient matrix of `fields` (square).
Expr field_determinant(const std::vector<VectorField>& fields);

struct AlgebraEntry {
  std::string name;
  std::map<std::string, Rational> params;
  StructureConstants constants;
  // Realization on x1..xn (type I base coordinates).
  InvariantFields free;
  // Realization on (x, u) or (x, y, u): the type II generators X_i and the
  // fields eta_i used for invariant differentiation.
  InvariantFields transitive;
};

/// Names: g1, 2g1, g2, 3g1, g1+g2, g3_1 .. g3_7. Parameter h for g3_4
/// (|h| <= 1, h != 0, 1; default 1/2) and p for g3_5 (p >= 0; default 0).
/// Throws CatalogError for unknown names or inadmissible parameters.
AlgebraEntry catalog_lookup(const std::string& name, const std::map<std::string, Rational>& params = {},
                            const SamplerConfig& sampler = {});

std::vector<std::string> catalog_names();

/// Parameter values used for table reproduction: h in {1/2, -1, -1/3} for
/// g3_4, p in {0, 1} for g3_5, a single empty map otherwise.
std::vector<std::map<std::string, Rational>> catalog_parameter_draws(const std::string& name);

/// `count` seeded random admissible parameter maps (small-denominator
/// rationals); a single empty map for parameter-free algebras.
std::vector<std::map<std::string, Rational>> random_parameter_draws(const std::string& name,
                                                                   int count, std::uint64_t seed);

/// Display name used in reports ("g3_4(h=1/2)").
std::string entry_label(const AlgebraEntry& e);

/// Coordinate names of the type II realization for dimension n.
std::vector<std::string> transitive_coordinates(std::size_t n);

}  // namespace lieinv
