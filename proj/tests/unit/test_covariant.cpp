#include "lieinv/covariant.hpp"
#include "lieinv/error.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace lieinv;

TEST(Covariant, TransportEquationBecomesLinear) {
  const PDEFile f = read_pde("coords: x,y; dep: u\nlhs: a1(x,y,u)*u_x + a2(x,y,u)*u_y + b(x,y,u)\n");
  const CovariantPDE t = to_covariant({f.space, f.lhs});
  EXPECT_EQ(t.kappa, 1);
  // a^i w_i - b w_n, up to the overall sign.
  const Expr expected = t.space.parse("a1(x,y,u)*w_x + a2(x,y,u)*w_y - b(x,y,u)*w_u");
  EXPECT_TRUE(is_zero(t.lhs + expected));
}

TEST(Covariant, QuadraticFirstOrder) {
  const PDEFile f = read_pde("coords: x,y; dep: u\nlhs: g11(x,y,u)*u_x^2 + g22(x,y,u)*u_y^2 + b(x,y,u)\n");
  const CovariantPDE t = to_covariant({f.space, f.lhs});
  EXPECT_EQ(t.kappa, 2);
  EXPECT_TRUE(is_zero(t.lhs - t.space.parse("g11(x,y,u)*w_x^2 + g22(x,y,u)*w_y^2 + w_u^2*b(x,y,u)")));
}

TEST(Covariant, MetricFormToScalar) {
  const PDEFile f = read_pde(
      "coords: x,y,u; dep: w\nlhs: g11(x,y,u)*w_x^2 + g22(x,y,u)*w_y^2 + g33(x,y,u)*w_u^2 + "
      "2*g12(x,y,u)*w_x*w_y + 2*g13(x,y,u)*w_x*w_u + 2*g23(x,y,u)*w_y*w_u\n");
  const ScalarPDE e = from_covariant({f.space, f.lhs, 0});
  const Expr expected = e.space.parse(
      "g11(x,y,u)*u_x^2 + 2*g12(x,y,u)*u_x*u_y + g22(x,y,u)*u_y^2 - 2*g13(x,y,u)*u_x - 2*g23(x,y,u)*u_y + g33(x,y,u)");
  EXPECT_TRUE(is_zero(e.lhs - expected));
}

TEST(Covariant, SecondDerivativeAloneIsNotRescaleInvariant) {
  const PDEFile f = read_pde("coords: x,u; dep: w\nlhs: w_xx\n");
  const CovariantPDE t{f.space, f.lhs, 0};
  EXPECT_FALSE(rescale_invariance_check(t).pass);
  EXPECT_THROW(from_covariant(t), NotRescaleInvariant);
}

TEST(Covariant, InhomogeneousFormIsRejected) {
  const PDEFile f = read_pde("coords: x,u; dep: w\nlhs: w_x + w_u^2\n");
  EXPECT_THROW(homogeneity_degree({f.space, f.lhs, 0}), NotHomogeneous);
}

TEST(Covariant, BatteryRoundTrips) {
  for (const auto& [name, text] : oracle::pde_battery()) {
    const PDEFile f = read_pde(text);
    const CovariantPDE t = to_covariant({f.space, f.lhs});
    const RescaleReport rep = rescale_invariance_check(t);
    EXPECT_TRUE(rep.pass) << name;
    EXPECT_EQ(rep.degree, Rational(t.kappa)) << name;
    const ScalarPDE back = from_covariant(t);
    EXPECT_TRUE(is_zero(back.lhs - f.lhs)) << name << ": " << render(back.lhs);
  }
}

TEST(Covariant, EulerAndRescaleOperatorsCommute) {
  const JetSpace w({"x", "y", "u"}, "w");
  for (const char* s : {"w_xx", "w_x*w_yu", "w_x^2*w_yy - 2*w_x*w_y*w_xy + w_y^2*w_xx", "x*w_u^3 + w_xu*w_y^2"}) {
    const Expr f = w.parse(s);
    for (std::size_t j = 0; j < 3; ++j) {
      const Expr dr = euler_operator(w, rescale_operator(w, j, f));
      const Expr rd = rescale_operator(w, j, euler_operator(w, f));
      EXPECT_TRUE(is_zero(dr - rd)) << s << " j=" << j;
    }
  }
}

TEST(Covariant, JInvariantsAreScaleFreeAndRescaleInvariant) {
  for (std::size_t n : {2u, 3u}) {
    std::vector<std::string> coords{"x", "y", "u"};
    if (n == 2) coords = {"x", "u"};
    const JetSpace w(coords, "w");
    const JInvariants J = J_invariants(w);
    EXPECT_EQ(J.normalized_first.size(), n - 1);
    EXPECT_EQ(J.normalized_second.size(), n * (n - 1) / 2);
    std::vector<Expr> all = J.normalized_first;
    all.insert(all.end(), J.normalized_second.begin(), J.normalized_second.end());
    for (const auto& e : all) {
      EXPECT_TRUE(is_zero(euler_operator(w, e))) << render(e);
      for (std::size_t j = 0; j < n; ++j) EXPECT_TRUE(is_zero(rescale_operator(w, j, e))) << render(e);
    }
  }
}

TEST(PDEFile, Errors) {
  EXPECT_THROW(read_pde("lhs: u_x\n"), Error);
  EXPECT_THROW(read_pde("coords: x; dep: u\nlhs: u_q\n"), ParseError);
}
