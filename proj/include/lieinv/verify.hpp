#pragma once

#include "lieinv/eval.hpp"
#include "lieinv/invariants.hpp"
#include "lieinv/jet.hpp"
#include "lieinv/liealg.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lieinv {

std::vector<ProlongedField> prolong_all(const JetSpace& j, const std::vector<VectorField>& generators);

/// True iff pr2 X_i e is zero for every i.
bool annihilation_check(const JetSpace& j, const std::vector<ProlongedField>& pro, const Expr& e,
                        const SamplerConfig& s = {});

/// Invariance of the equation lhs = 0 rather than of lhs itself: pr2 X_i lhs
/// vanishes after eliminating `leading` (a jet variable lhs is linear in)
/// through lhs = 0.
bool equation_invariance_check(const JetSpace& j, const std::vector<ProlongedField>& pro, const Expr& lhs,
                               Symbol leading, const SamplerConfig& s = {});

/// Max over sample points of the rank of the central-difference Jacobian
/// (step 1e-6) with respect to all jet-space coordinates, by fully pivoted
/// elimination on row-normalized rows with threshold 1e-9 relative to the
/// largest pivot.
int functional_rank(const JetSpace& j, const std::vector<Expr>& es, const SamplerConfig& s = {});

struct Equivalence {
  int rank_a = 0, rank_b = 0, rank_union = 0;
  bool equivalent() const { return rank_a == rank_b && rank_b == rank_union; }
};
Equivalence equivalence(const JetSpace& j, const std::vector<Expr>& a, const std::vector<Expr>& b,
                        const SamplerConfig& s = {});
bool equivalence_check(const JetSpace& j, const std::vector<Expr>& a, const std::vector<Expr>& b,
                       const SamplerConfig& s = {});

/// Marks the set verified when every member is annihilated and the members
/// are functionally independent.
bool verify_invariant_set(InvariantSet& inv, const SamplerConfig& s = {});

/// Replaces every opaque head by a seeded random polynomial of degree <= 2
/// in its arguments; `k` selects the draw.
Expr instantiate_heads(const Expr& e, std::uint64_t seed, int k);

/// e * (1 + c z / 10) for a coordinate z moved by the generators and a small
/// nonzero integer c, both picked by (seed, k).
Expr mutate(const Expr& e, const std::vector<VectorField>& generators, std::uint64_t seed, int k);

struct NegativeControl {
  std::string algebra;
  std::vector<std::string> mutated;  // rendered perturbed expressions
  std::vector<bool> rejected;        // annihilation_check failed, as it must
  bool pass = false;
};
/// Three perturbed invariants per catalog algebra (default parameters).
std::vector<NegativeControl> negative_controls(const SamplerConfig& s = {});

// ---------------------------------------------------------------------------
// Table fixtures.

struct FixtureInvariant {
  std::string label;
  std::string expr;     // as used by the self-test
  std::string printed;  // table form when it differs from `expr`
};

struct Fixture {
  std::string table;  // 1d, 2d-free, 3d-free, 2d-transitive, 3d-transitive
  std::string algebra;
  PipelineKind pipeline = PipelineKind::II;
  std::vector<FixtureInvariant> invariants;  // type I: written for one invariant variable y
  std::string equation;                      // table equation lhs (type II), "" otherwise
  std::string printed_equation;              // table form when it differs from `equation`
};

const std::vector<Fixture>& fixtures();
std::vector<std::string> fixture_tables();

/// Fixture invariants parsed in the jet space of `inv` (type I entries that
/// mention y are dropped when m = 1); parameters take the values of `inv`.
std::vector<Expr> fixture_exprs(const Fixture& f, const InvariantSet& inv);

struct RowResult {
  std::string table;
  std::string algebra;  // entry label
  int m = 0;
  bool fixture_annihilated = false;
  bool generated_annihilated = false;
  bool equivalent = false;
  bool templates_annihilated = false;
  bool equation_invariant = true;  // table equation, type II only
  int rank_generated = 0, rank_fixture = 0, rank_union = 0, expected_rank = 0;
  std::vector<std::string> failures;
  bool pass = false;
};

struct SuiteOptions {
  std::vector<std::string> tables;  // empty means all
  std::map<std::string, std::vector<std::map<std::string, Rational>>> params;  // per-algebra draws
  SamplerConfig sampler;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<RowResult> rows;
  bool pass = false;
};

SuiteReport run_fixture_suite(const SuiteOptions& opts);

nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);
std::string to_csv(const SuiteReport& r);

// ---------------------------------------------------------------------------
// so(3) worked example.

struct So3Report {
  bool xi_match = false, eta_match = false;
  bool first_order_equivalent = false;
  double printed_identity_error = 0.0;  // recombination identities with the table's labels
  double identity_error = 0.0;          // same identities with the t12/t23 labels exchanged
  bool identities_hold = false;
  bool pass() const { return xi_match && eta_match && first_order_equivalent && identities_hold; }
};
So3Report so3_worked_example(const SamplerConfig& s = {});

}  // namespace lieinv
