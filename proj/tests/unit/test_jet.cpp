#include "lieinv/error.hpp"
#include "lieinv/eval.hpp"
#include "lieinv/jet.hpp"

#include <gtest/gtest.h>

using namespace lieinv;

namespace {

// Reference prolongation for one independent variable x and dependent u:
// phi1 = D(eta) - u_x D(xi), phi2 = D(phi1) - u_xx D(xi), with D written out
// for functions of (x, u, u_x).
struct Reference {
  JetSpace j{{"x"}, "u"};
  Symbol x = j.independent(0), u = j.dependent(), ux = j.jet(0), uxx = j.jet(0, 0);

  Expr D(const Expr& f) const {
    return diff(f, x) + Expr(ux) * diff(f, u) + Expr(uxx) * diff(f, ux);
  }
};

}  // namespace

TEST(JetSpace, NamesAndLookup) {
  const JetSpace j({"x", "y"}, "u");
  EXPECT_EQ(j.jet(0, 1).name(), "u_xy");
  EXPECT_EQ(j.jet(1, 0), j.jet(0, 1));
  EXPECT_EQ(j.all_symbols().size(), 8u);
  EXPECT_EQ(j.parse("u_yx"), Expr(j.jet(0, 1)));
  const JetSpace w({"x", "y", "u"}, "w");
  EXPECT_EQ(w.jet(0, 2).name(), "w_xu");
}

TEST(TotalDerivative, ChainRule) {
  const JetSpace j({"x", "y"}, "u");
  const Expr e = j.parse("x*u^2 + sin(u_y)");
  EXPECT_TRUE(is_zero(total_derivative(j, e, 0) - j.parse("u^2 + 2*x*u*u_x + cos(u_y)*u_xy")));
  EXPECT_THROW(total_derivative(j, j.parse("u_xx"), 0), OrderOverflow);
}

TEST(Prolongation, MatchesReferenceFormula) {
  Reference r;
  const std::vector<std::pair<std::string, std::string>> fields{
      {"1", "0"}, {"x", "0"}, {"0", "u"}, {"x^2", "x*u"}, {"u", "-x"}, {"exp(u)*x", "sin(x) + u^2"}};
  for (const auto& [xi_s, eta_s] : fields) {
    const Expr xi = r.j.parse(xi_s), eta = r.j.parse(eta_s);
    const Expr phi1 = r.D(eta) - Expr(r.ux) * r.D(xi);
    const Expr phi2 = r.D(phi1) - Expr(r.uxx) * r.D(xi);
    const ProlongedField p = prolong2(r.j, VectorField({r.x, r.u}, {xi, eta}));
    EXPECT_TRUE(is_zero(p.phi1[0] - phi1)) << xi_s << ", " << eta_s;
    EXPECT_TRUE(is_zero(p.phi2[0][0] - phi2)) << xi_s << ", " << eta_s;
  }
}

TEST(Prolongation, ScalingWeights) {
  // x d_x + y d_y: u_a has weight -1 and u_ab weight -2.
  const JetSpace j({"x", "y"}, "u");
  const ProlongedField p = prolong2(j, VectorField({j.independent(0), j.independent(1), j.dependent()},
                                                   {j.parse("x"), j.parse("y"), Expr(0)}));
  EXPECT_EQ(p.apply(j, j.parse("u_x")), j.parse("-u_x"));
  EXPECT_EQ(p.apply(j, j.parse("u_xy")), j.parse("-2*u_xy"));
  EXPECT_TRUE(is_zero(p.apply(j, j.parse("u_xx/u_x^2"))));
}

TEST(VectorField, CommutatorOfTranslationAndRotation) {
  const JetSpace j({"x", "y"}, "u");
  const std::vector<Symbol> c{j.independent(0), j.independent(1)};
  const VectorField dx = basis_field(c, 0);
  const VectorField rot(c, {j.parse("-y"), j.parse("x")});
  const VectorField br = commutator(dx, rot);
  EXPECT_EQ(br[0], Expr(0));
  EXPECT_EQ(br[1], Expr(1));
}

TEST(SymmetrizedInvariant, SecondOrderIsSymmetricMean) {
  const JetSpace j({"x", "y"}, "u");
  const std::vector<Symbol> c{j.independent(0), j.independent(1)};
  const std::vector<VectorField> etas{basis_field(c, 0), VectorField(c, {j.parse("y"), Expr(1)})};
  const Expr u12 = symmetrized_invariant(j, etas, {0, 1});
  EXPECT_TRUE(is_zero(u12 - j.parse("u_xy + y*u_xx")));
  EXPECT_EQ(symmetrized_invariant(j, etas, {1, 0}), u12);
}
