#include "lieinv/error.hpp"
#include "lieinv/jet.hpp"

namespace lieinv {

namespace {

void require_order_below_two(const JetSpace& j, const Expr& e, const char* op) {
  for (Symbol s : free_symbols(e)) {
    if (s.is_jet() && s.dependent() == j.dependent_name() && s.order() >= 2)
      throw OrderOverflow(std::string(op) + " of an expression containing " + s.name());
  }
}

}  // namespace

Expr total_derivative(const JetSpace& j, const Expr& e, std::size_t a) {
  require_order_below_two(j, e, "total derivative");
  std::vector<Expr> terms{diff(e, j.independent(a))};
  terms.push_back(Expr(j.jet(a)) * diff(e, j.dependent()));
  for (std::size_t b = 0; b < j.dim(); ++b) terms.push_back(Expr(j.jet(a, b)) * diff(e, j.jet(b)));
  return make_add(std::move(terms));
}

ProlongedField prolong2(const JetSpace& j, const VectorField& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Symbol c = x.coordinates()[i];
    if (c != j.dependent() && !j.position(c))
      throw ContextMismatch("field coordinate '" + c.name() + "' is not a point coordinate of the jet space");
    for (Symbol s : free_symbols(x[i])) {
      if (s.is_jet() && s.order() > 0)
        throw Error("jet", "coefficient of d_" + c.name() + " depends on " + s.name() +
                               "; only point fields can be prolonged");
    }
  }
  const std::size_t n = j.dim();
  std::vector<Expr> xi(n);
  for (std::size_t c = 0; c < n; ++c) xi[c] = x.coefficient(j.independent(c));
  const Expr theta = x.coefficient(j.dependent());

  ProlongedField pf;
  std::vector<Symbol> coords = j.independents();
  coords.push_back(j.dependent());
  std::vector<Expr> coeffs = xi;
  coeffs.push_back(theta);
  pf.base = VectorField(coords, coeffs);

  // D_b xi^c, reused for both orders.
  std::vector<std::vector<Expr>> dxi(n, std::vector<Expr>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) dxi[b][c] = total_derivative(j, xi[c], b);

  pf.phi1.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Expr> terms{total_derivative(j, theta, a)};
    for (std::size_t c = 0; c < n; ++c) terms.push_back(-(Expr(j.jet(c)) * dxi[a][c]));
    pf.phi1[a] = make_add(std::move(terms));
  }
  pf.phi2.assign(n, std::vector<Expr>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::vector<Expr> terms{total_derivative(j, pf.phi1[a], b)};
      for (std::size_t c = 0; c < n; ++c) terms.push_back(-(Expr(j.jet(a, c)) * dxi[b][c]));
      pf.phi2[a][b] = pf.phi2[b][a] = make_add(std::move(terms));
    }
  }
  return pf;
}

Expr ProlongedField::apply(const JetSpace& j, const Expr& e) const {
  std::vector<Expr> terms{base.apply(e)};
  const std::size_t n = j.dim();
  for (std::size_t a = 0; a < n; ++a) terms.push_back(phi1[a] * diff(e, j.jet(a)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) terms.push_back(phi2[a][b] * diff(e, j.jet(a, b)));
  return make_add(std::move(terms));
}

Expr eta_hat_apply(const JetSpace& j, const VectorField& eta, const Expr& e) {
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (eta[i].is_zero_const()) continue;
    auto a = j.position(eta.coordinates()[i]);
    if (!a) throw ContextMismatch("eta component along '" + eta.coordinates()[i].name() + "'");
    terms.push_back(eta[i] * total_derivative(j, e, *a));
  }
  return make_add(std::move(terms));
}

Expr symmetrized_invariant(const JetSpace& j, const std::vector<VectorField>& etas,
                           const std::vector<std::size_t>& idx) {
  const Expr u(j.dependent());
  if (idx.size() == 1) return eta_hat_apply(j, etas.at(idx[0]), u);
  if (idx.size() != 2) throw Error("jet", "symmetrized invariants have order 1 or 2");
  const Expr ui = eta_hat_apply(j, etas.at(idx[0]), u);
  if (idx[0] == idx[1]) return eta_hat_apply(j, etas.at(idx[0]), ui);
  const Expr uj = eta_hat_apply(j, etas.at(idx[1]), u);
  return Rational(1, 2) * (eta_hat_apply(j, etas.at(idx[0]), uj) + eta_hat_apply(j, etas.at(idx[1]), ui));
}

}  // namespace lieinv
