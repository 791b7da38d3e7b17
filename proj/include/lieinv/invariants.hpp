#pragma once

#include "lieinv/eval.hpp"
#include "lieinv/jet.hpp"
#include "lieinv/liealg.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lieinv {

enum class PipelineKind { I, II };
const char* pipeline_tag(PipelineKind k);  // "I" or "II"

struct LabeledExpr {
  std::string label;
  Expr expr;
};

/// Differential invariants of one realization. The leading `first_order`
/// members involve no second-order jet variables; they are the arguments of
/// the template's arbitrary functions.
struct InvariantSet {
  std::string algebra;  // display label, e.g. "g3_4(h=1/2)"
  std::map<std::string, Rational> params;
  PipelineKind pipeline = PipelineKind::II;
  int m = 0;  // type I: number of invariant variables including u
  JetSpace space;
  std::vector<VectorField> generators;  // over space.independents() and the dependent
  std::vector<LabeledExpr> invariants;
  std::size_t first_order = 0;
  bool verified = false;

  std::vector<Expr> exprs() const;
  std::vector<Expr> first_order_exprs() const;
};

/// Quasi-linear template: the first second-order invariant with coefficient 1
/// plus the others weighted by opaque heads of the first-order invariants.
struct PDETemplate {
  Expr lhs;
  std::string form;  // "quasi-linear type I" or "quasi-linear type II"
  std::vector<std::string> heads;
};

struct PipelineResult {
  InvariantSet set;
  PDETemplate equation;
};

/// Free intransitive action: generators xi_i on x1..xn, invariant variables
/// y (m - 1 of them) and u. Throws SingularRealization.
PipelineResult type1_pipeline(const AlgebraEntry& entry, int m, const SamplerConfig& s = {});

/// Simply transitive action on (x, u) or (x, y, u).
PipelineResult type2_pipeline(const AlgebraEntry& entry, const SamplerConfig& s = {});
/// Same, with fields built from raw structure constants.
PipelineResult type2_pipeline(const StructureConstants& c, const std::string& name,
                              const SamplerConfig& s = {});

/// Checks that each input is independent of w_n, w_an, w_nn, then sets
/// w_n = 1 and w_an = w_nn = 0. Throws ResidualDependence when another
/// w-variable survives or a derivative along the eliminated ones is nonzero.
std::vector<Expr> eliminate_w(const JetSpace& w, const std::vector<Expr>& inputs,
                              const SamplerConfig& s = {});

PDETemplate emit_equation(const InvariantSet& inv);

/// Generators of a transitive realization as fields on a scalar jet space:
/// the last coordinate becomes the dependent variable.
std::vector<VectorField> fields_on_scalar_space(const JetSpace& scalar, const std::vector<VectorField>& fields);

/// {"algebra", "params", "pipeline", "m", "coordinates", "invariants":[{"label","expr"}],
///  "template", "heads", "verified", "seed"}.
nlohmann::json to_json(const PipelineResult& r, std::uint64_t seed);

}  // namespace lieinv
