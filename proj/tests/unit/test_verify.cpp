#include "lieinv/invariants.hpp"
#include "lieinv/verify.hpp"

#include <gtest/gtest.h>

using namespace lieinv;

TEST(FunctionalRank, DependentAndIndependentSets) {
  const JetSpace j({"x"}, "u");
  EXPECT_EQ(functional_rank(j, {j.parse("u_x"), j.parse("u_x^2"), j.parse("sin(u_x)")}), 1);
  EXPECT_EQ(functional_rank(j, {j.parse("u_x"), j.parse("u_xx")}), 2);
  EXPECT_EQ(functional_rank(j, {j.parse("exp(u)*u_x"), j.parse("exp(2*u)*u_xx"), j.parse("exp(3*u)*u_x*u_xx")}), 2);
  EXPECT_EQ(functional_rank(j, {}), 0);
}

TEST(Equivalence, DetectsMissingMember) {
  const JetSpace j({"x"}, "u");
  const Equivalence e = equivalence(j, {j.parse("u_x")}, {j.parse("u_x"), j.parse("u_xx")});
  EXPECT_FALSE(e.equivalent());
  EXPECT_EQ(e.rank_union, 2);
}

TEST(EquationInvariance, LeadingTermElimination) {
  // u_xx + exp(-2u) b(exp(u) u_x) = 0 is invariant under g2 on (x, u) though
  // its left side is not.
  const PipelineResult r = type2_pipeline(catalog_lookup("g2"));
  const JetSpace& j = r.set.space;
  const auto pro = prolong_all(j, r.set.generators);
  const Expr lhs = j.parse("u_xx + u_x^2 + exp(-2*u)*b(exp(u)*u_x)");
  EXPECT_FALSE(annihilation_check(j, pro, lhs));
  EXPECT_TRUE(equation_invariance_check(j, pro, lhs, j.jet(0, 0)));
  EXPECT_FALSE(equation_invariance_check(j, pro, j.parse("u_xx + b(u_x)"), j.jet(0, 0)));
}

TEST(Templates, InstantiationIsDeterministic) {
  const JetSpace j({"x"}, "u");
  const Expr e = j.parse("a(u_x, u)*u_xx + b(u_x)");
  EXPECT_EQ(instantiate_heads(e, 1, 0), instantiate_heads(e, 1, 0));
  EXPECT_NE(instantiate_heads(e, 1, 0), instantiate_heads(e, 1, 1));
  EXPECT_TRUE(head_names(instantiate_heads(e, 1, 0)).empty());
}

TEST(NegativeControls, EveryAlgebraRejectsPerturbations) {
  const auto ncs = negative_controls();
  EXPECT_EQ(ncs.size(), catalog_names().size());
  for (const auto& nc : ncs) {
    EXPECT_EQ(nc.rejected.size(), 3u);
    EXPECT_TRUE(nc.pass) << nc.algebra;
  }
}

TEST(Fixtures, TablesAndSelfTest) {
  EXPECT_EQ(fixture_tables().size(), 5u);
  std::size_t with_printed = 0;
  for (const auto& f : fixtures())
    for (const auto& i : f.invariants) with_printed += !i.printed.empty();
  // Corrected transcriptions keep their printed form.
  EXPECT_GE(with_printed, 5u);
}

TEST(Suite, TwoDimensionalTransitiveTable) {
  SuiteOptions o;
  o.tables = {"2d-transitive"};
  const SuiteReport r = run_fixture_suite(o);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_TRUE(r.pass);
  EXPECT_NE(to_text(r).find("2/2 rows passed"), std::string::npos);
  EXPECT_EQ(to_json(r)["rows"].size(), 2u);
}

TEST(Suite, PrintedEquationFailsWhereCorrected) {
  // The printed g3_3 equation lacks the u_xy factor on a1.
  const PipelineResult r = type2_pipeline(catalog_lookup("g3_3"));
  const JetSpace& j = r.set.space;
  const auto pro = prolong_all(j, r.set.generators);
  for (const auto& f : fixtures()) {
    if (f.algebra != "g3_3" || f.pipeline != PipelineKind::II) continue;
    ASSERT_FALSE(f.printed_equation.empty());
    const Expr printed = instantiate_heads(j.parse(f.printed_equation), 3, 0);
    const Expr fixed = instantiate_heads(j.parse(f.equation), 3, 0);
    EXPECT_FALSE(equation_invariance_check(j, pro, printed, j.jet(0, 0)));
    EXPECT_TRUE(equation_invariance_check(j, pro, fixed, j.jet(0, 0)));
  }
}

TEST(So3, WorkedExample) {
  const So3Report r = so3_worked_example();
  EXPECT_TRUE(r.xi_match);
  EXPECT_TRUE(r.eta_match);
  EXPECT_TRUE(r.first_order_equivalent);
  EXPECT_LE(r.identity_error, 1e-9);
  EXPECT_GT(r.printed_identity_error, 1e-3);
}
