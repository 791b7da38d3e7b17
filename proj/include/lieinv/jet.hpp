#pragma once

#include "lieinv/expr.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieinv {

/// Second-order jet space over independents (base coordinates followed by
/// invariant coordinates) with one dependent variable. Jet variables are
/// named dependent + "_" + the coordinate names in coordinate order, e.g.
/// u_x, u_xy, w_xu. The dependent itself is the order-0 jet symbol.
class JetSpace {
 public:
  JetSpace(std::vector<std::string> base, std::string dependent,
           std::vector<std::string> invariant = {}, std::vector<std::string> parameters = {});

  std::size_t dim() const { return independents_.size(); }
  const std::vector<Symbol>& independents() const { return independents_; }
  std::vector<Symbol> base() const;
  std::vector<Symbol> invariant() const;
  const std::vector<Symbol>& parameters() const { return parameters_; }
  Symbol dependent() const { return dependent_; }
  const std::string& dependent_name() const { return dependent_.name(); }

  Symbol independent(std::size_t a) const { return independents_.at(a); }
  Symbol jet(std::size_t a) const;                 // u_a
  Symbol jet(std::size_t a, std::size_t b) const;  // u_ab, symmetric
  std::vector<Symbol> first_order() const;
  std::vector<Symbol> second_order() const;  // a <= b
  std::vector<Symbol> all_symbols() const;   // independents, u, u_a, u_ab

  /// Position of a coordinate symbol among the independents.
  std::optional<std::size_t> position(Symbol coordinate) const;
  /// (a) or (a, b) for jet symbols of this space; empty for u.
  std::optional<std::vector<std::size_t>> jet_index(Symbol s) const;

  std::optional<Symbol> lookup(const std::string& name) const;
  Expr parse(std::string_view text) const;

  bool same_as(const JetSpace& other) const;

 private:
  std::size_t base_count_ = 0;
  std::vector<Symbol> independents_;
  std::vector<Symbol> parameters_;
  Symbol dependent_;
  std::vector<Symbol> first_;
  std::vector<std::vector<Symbol>> second_;  // second_[a][b] for any a, b
  std::map<std::string, Symbol> by_name_;
};

/// First-order differential operator X = sum_j X^j d/dc_j over an ordered
/// list of point coordinates.
class VectorField {
 public:
  VectorField() = default;
  VectorField(std::vector<Symbol> coordinates, std::vector<Expr> coefficients);

  const std::vector<Symbol>& coordinates() const { return coords_; }
  const std::vector<Expr>& coefficients() const { return coeffs_; }
  const Expr& operator[](std::size_t i) const { return coeffs_.at(i); }
  Expr coefficient(Symbol s) const;  // 0 when s is not a coordinate
  std::size_t size() const { return coords_.size(); }

  Expr apply(const Expr& e) const;
  VectorField scaled(const Expr& factor) const;
  VectorField simplified() const;

  std::string render() const;  // "a*d_x + b*d_u"

 private:
  std::vector<Symbol> coords_;
  std::vector<Expr> coeffs_;
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);

/// [X, Y]^k = sum_j X^j d_j Y^k - Y^j d_j X^k. Throws ContextMismatch.
VectorField commutator(const VectorField& x, const VectorField& y);

/// Translation d/dc over the given coordinates.
VectorField basis_field(const std::vector<Symbol>& coordinates, std::size_t i);

struct ProlongedField {
  VectorField base;               // over independents followed by the dependent
  std::vector<Expr> phi1;         // phi_a
  std::vector<std::vector<Expr>> phi2;  // phi_ab, symmetric

  Expr apply(const JetSpace& j, const Expr& e) const;
};

/// D_a e. Throws OrderOverflow when e already has second-order variables.
Expr total_derivative(const JetSpace& j, const Expr& e, std::size_t a);

/// Second prolongation of a point field given on (independents, dependent).
/// Components the field does not mention are zero.
ProlongedField prolong2(const JetSpace& j, const VectorField& x);

/// Sum_j eta^j D_j e, for eta over the independents of j.
Expr eta_hat_apply(const JetSpace& j, const VectorField& eta, const Expr& e);

/// u_(i) = eta_i u and u_(ij) = (eta_i eta_j + eta_j eta_i) u / 2, indices
/// 0-based into `etas`.
Expr symmetrized_invariant(const JetSpace& j, const std::vector<VectorField>& etas,
                           const std::vector<std::size_t>& idx);

}  // namespace lieinv
