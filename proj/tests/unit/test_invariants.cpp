#include "lieinv/error.hpp"
#include "lieinv/invariants.hpp"
#include "lieinv/verify.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace lieinv;

TEST(TypeII, G2MatchesClosedForm) {
  const PipelineResult r = type2_pipeline(catalog_lookup("g2"));
  const JetSpace& j = r.set.space;
  ASSERT_EQ(r.set.invariants.size(), 2u);
  EXPECT_TRUE(equivalence_check(j, r.set.exprs(), {j.parse("exp(u)*u_x"), j.parse("exp(2*u)*u_xx")}));
  EXPECT_EQ(r.set.first_order, 1u);
  EXPECT_EQ(r.equation.heads, std::vector<std::string>{"b"});
}

TEST(TypeII, CountsForEveryAlgebra) {
  for (const auto& name : catalog_names()) {
    const AlgebraEntry e = catalog_lookup(name);
    if (e.constants.dim() < 2) continue;
    const PipelineResult r = type2_pipeline(e);
    const std::size_t expected = e.constants.dim() == 2 ? 2 : 5;
    EXPECT_EQ(r.set.invariants.size(), expected) << name;
    InvariantSet set = r.set;
    EXPECT_TRUE(verify_invariant_set(set)) << name;
  }
}

TEST(TypeII, So3FirstOrderAgainstHandWrittenEvaluator) {
  const PipelineResult r = type2_pipeline(catalog_lookup("g3_7"));
  const JetSpace& j = r.set.space;
  const Symbol y = j.independent(1), u = j.dependent(), ux = j.jet(0), uy = j.jet(1);
  const auto first = r.set.first_order_exprs();
  ASSERT_EQ(first.size(), 2u);
  std::vector<Assignment> points;
  const auto rows = sample_values(first, SamplerConfig{}, &points);
  ASSERT_FALSE(rows.empty());
  for (std::size_t p = 0; p < rows.size(); ++p) {
    const Assignment& a = points[p];
    const double v1 = oracle::so3_v1(a.at(y), a.at(u), a.at(ux), a.at(uy));
    const double v2 = oracle::so3_v2(a.at(y), a.at(u), a.at(ux), a.at(uy));
    // The pipeline's normalization gives the negatives of the closed forms.
    EXPECT_NEAR(rows[p][0], -v1, 1e-9 * std::max(1.0, std::abs(v1)));
    EXPECT_NEAR(rows[p][1], -v2, 1e-9 * std::max(1.0, std::abs(v2)));
  }
  EXPECT_TRUE(equivalence_check(j, first,
                                {j.parse("u_x*cos(u)/cos(y) - u_y*sin(u) - cos(u)*tan(y)"),
                                 j.parse("u_x*sin(u)/cos(y) + u_y*cos(u) - sin(u)*tan(y)")}));
}

TEST(TypeII, FromRawStructureConstantsMatchesCatalog) {
  for (const auto& name : {"2g1", "g2", "3g1", "g3_3", "g3_7"}) {
    const AlgebraEntry e = catalog_lookup(name);
    const PipelineResult a = type2_pipeline(e);
    const PipelineResult b = type2_pipeline(e.constants, name);
    InvariantSet set = b.set;
    EXPECT_TRUE(verify_invariant_set(set)) << name;
    EXPECT_EQ(b.set.invariants.size(), a.set.invariants.size()) << name;
  }
}

TEST(EliminateW, RawFirstOrderInvariantHasResidualDependence) {
  const AlgebraEntry e = catalog_lookup("g2");
  const JetSpace w(transitive_coordinates(2), "w");
  const Expr raw = symmetrized_invariant(w, e.transitive.eta, {0});
  EXPECT_THROW(eliminate_w(w, {raw}), ResidualDependence);
}

TEST(EliminateW, GaugeOnRatios) {
  const JetSpace w({"x", "u"}, "w");
  const auto out = eliminate_w(w, {w.parse("x + u")});
  EXPECT_EQ(out[0], w.parse("x + u"));
  EXPECT_THROW(eliminate_w(w, {w.parse("w_u^2")}), ResidualDependence);
}

TEST(TypeI, G2ContainsPrintedSecondOrderEntry) {
  const PipelineResult r = type1_pipeline(catalog_lookup("g2"), 1);
  const JetSpace& j = r.set.space;
  const Expr printed = j.parse("exp(x2)*(u_x1x2 + u_x1/2)");
  const auto pro = prolong_all(j, r.set.generators);
  EXPECT_TRUE(annihilation_check(j, pro, printed));
  auto with = r.set.exprs();
  with.push_back(printed);
  EXPECT_EQ(functional_rank(j, with), functional_rank(j, r.set.exprs()));
}

TEST(TypeI, CountsAndNames) {
  const AlgebraEntry e = catalog_lookup("3g1");
  const PipelineResult r1 = type1_pipeline(e, 1);
  const PipelineResult r3 = type1_pipeline(e, 3);
  // u, u_(i), u_(ij): 1 + 3 + 6.
  EXPECT_EQ(r1.set.invariants.size(), 10u);
  // y1, y2, u, u_y1, u_y2, u_(i), y-y block (3), u_(ij) (6), u_(i)y (6).
  EXPECT_EQ(r3.set.invariants.size(), 2u + 1 + 2 + 3 + 3 + 6 + 6);
  EXPECT_EQ(r3.set.invariants[0].label, "y1");
  EXPECT_THROW(type1_pipeline(e, 0), Error);
}

TEST(Template, HeadsAndJson) {
  const PipelineResult r = type2_pipeline(catalog_lookup("3g1"));
  EXPECT_EQ(r.equation.heads, (std::vector<std::string>{"a13", "a23", "b"}));
  const auto j = to_json(r, 7);
  EXPECT_EQ(j["pipeline"], "II");
  EXPECT_EQ(j["invariants"].size(), 5u);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_FALSE(j.contains("m"));
}
