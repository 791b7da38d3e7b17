#include "lieinv/error.hpp"
#include "lieinv/jet.hpp"

namespace lieinv {

VectorField::VectorField(std::vector<Symbol> coordinates, std::vector<Expr> coefficients)
    : coords_(std::move(coordinates)), coeffs_(std::move(coefficients)) {
  if (coords_.size() != coeffs_.size())
    throw Error("jet", "vector field needs one coefficient per coordinate");
}

Expr VectorField::coefficient(Symbol s) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] == s) return coeffs_[i];
  return Expr(0);
}

Expr VectorField::apply(const Expr& e) const {
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coeffs_[i].is_zero_const()) continue;
    terms.push_back(coeffs_[i] * diff(e, coords_[i]));
  }
  return make_add(std::move(terms));
}

VectorField VectorField::scaled(const Expr& factor) const {
  std::vector<Expr> cs;
  for (const auto& c : coeffs_) cs.push_back(factor * c);
  return {coords_, std::move(cs)};
}

VectorField VectorField::simplified() const {
  std::vector<Expr> cs;
  for (const auto& c : coeffs_) cs.push_back(simplify_basic(c));
  return {coords_, std::move(cs)};
}

std::string VectorField::render() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coeffs_[i].is_zero_const()) continue;
    auto [k, rest] = split_coefficient(coeffs_[i]);
    const bool negative = k < 0 && !out.empty();
    if (!out.empty()) out += negative ? " - " : " + ";
    const Expr c = negative ? -coeffs_[i] : coeffs_[i];
    const std::string d = "d_" + coords_[i].name();
    if (c.is_one_const()) {
      out += d;
    } else if (c.kind() == ExprKind::Add) {
      out += "(" + lieinv::render(c) + ")*" + d;
    } else {
      out += lieinv::render(c) + "*" + d;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

void require_same(const VectorField& a, const VectorField& b) {
  if (a.coordinates() != b.coordinates())
    throw ContextMismatch("vector fields are defined over different coordinates");
}

}  // namespace

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same(a, b);
  std::vector<Expr> cs;
  for (std::size_t i = 0; i < a.size(); ++i) cs.push_back(a[i] + b[i]);
  return {a.coordinates(), std::move(cs)};
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  require_same(a, b);
  std::vector<Expr> cs;
  for (std::size_t i = 0; i < a.size(); ++i) cs.push_back(a[i] - b[i]);
  return {a.coordinates(), std::move(cs)};
}

VectorField commutator(const VectorField& x, const VectorField& y) {
  require_same(x, y);
  std::vector<Expr> cs;
  for (std::size_t k = 0; k < x.size(); ++k) cs.push_back(x.apply(y[k]) - y.apply(x[k]));
  return {x.coordinates(), std::move(cs)};
}

VectorField basis_field(const std::vector<Symbol>& coordinates, std::size_t i) {
  std::vector<Expr> cs(coordinates.size(), Expr(0));
  cs.at(i) = Expr(1);
  return {coordinates, std::move(cs)};
}

}  // namespace lieinv
