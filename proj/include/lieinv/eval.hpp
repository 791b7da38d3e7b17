#pragma once

#include "lieinv/expr.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace lieinv {

using Assignment = std::unordered_map<Symbol, double>;

/// Throws UnboundSymbol or SingularEvaluation. Opaque function heads are
/// evaluated through a fixed smooth realization keyed by the head name.
double eval_numeric(const Expr& e, const Assignment& a);

struct Evaluated {
  double value = 0.0;
  double magnitude = 0.0;  // absolute-value bound, sensitive to cancellation
};
Evaluated eval_with_magnitude(const Expr& e, const Assignment& a);

/// Deterministic realization of an opaque head and its partial derivatives.
double head_value(const std::string& head, std::span<const double> args, std::span<const int> deriv);

struct SamplerConfig {
  std::uint64_t seed = 0xC0FFEE;
  int points = 32;
  double tol = 1e-7;
  double coord_range = 0.4;
  double jet_range = 1.0;
  double denom_lo = 0.5;
  double denom_hi = 1.5;
  int attempts = 16;
  Assignment fixed;  // symbols pinned to a value at every point
};

/// Value of `s` at sample `point`, retry `attempt`. Depends only on the seed
/// and the symbol name, so different expressions see consistent points.
double sample_value(const SamplerConfig& cfg, Symbol s, int point, int attempt, bool in_denominator);

Assignment sample_point(const SamplerConfig& cfg, const std::set<Symbol, SymbolLess>& symbols,
                        const std::set<Symbol, SymbolLess>& denominators, int point, int attempt);

struct ZeroTest {
  bool zero = true;
  int evaluated = 0;
  int singular = 0;
  double worst_ratio = 0.0;  // max |value| / magnitude over evaluated points
};

/// Randomized zero test. Throws Unsampleable when no point is regular.
ZeroTest zero_test(const Expr& e, const SamplerConfig& cfg = {});
bool is_zero(const Expr& e, const SamplerConfig& cfg = {});

/// Evaluates several expressions at the same regular sample points; a point
/// is kept only when every expression is regular there.
std::vector<std::vector<double>> sample_values(std::span<const Expr> es, const SamplerConfig& cfg,
                                               std::vector<Assignment>* points = nullptr);

}  // namespace lieinv
