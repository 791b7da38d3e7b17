#include "lieinv/error.hpp"
#include "lieinv/eval.hpp"
#include "lieinv/expr.hpp"
#include "lieinv/jet.hpp"
#include "lieinv/parse.hpp"
#include "support/properties.hpp"

#include <gtest/gtest.h>

using namespace lieinv;

namespace {

const JetSpace kXY({"x", "y"}, "u", {}, {"h"});

Expr P(const std::string& s) { return kXY.parse(s); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-2")), "-2");
  EXPECT_EQ(to_string(parse_rational("0.25")), "1/4");
}

TEST(Canonical, OperandOrderAndLikeTerms) {
  EXPECT_EQ(P("x + y"), P("y + x"));
  EXPECT_EQ(P("2*x + 3*x"), P("5*x"));
  EXPECT_EQ(P("x/x"), Expr(1));
  EXPECT_EQ(P("exp(u)*exp(u)"), P("exp(2*u)"));
  EXPECT_EQ(P("cos(-x)"), P("cos(x)"));
  EXPECT_EQ(P("sin(-x)"), P("-sin(x)"));
  EXPECT_EQ(P("x - x"), Expr(0));
}

TEST(Render, RoundTrips) {
  for (const char* s : {"u_x*exp(u)", "-u_x^2*exp(2*u) - u_xx*exp(2*u)", "b(-u_x*exp(u), y) + h*u_xy/u_y^3",
                        "sin(x)^2 + cos(x)*tan(y)", "x^(1/2)"}) {
    const Expr e = P(s);
    EXPECT_EQ(P(render(e)), e) << s;
  }
}

TEST(Render, DerivativeHeadsRoundTrip) {
  const Expr f = P("F(u_x, y)");
  const Expr d = diff(f, Symbol::coordinate("y"));
  EXPECT_EQ(render(d), "F__01(u_x, y)");
  EXPECT_EQ(P(render(d)), d);
}

TEST(Parse, Errors) {
  EXPECT_THROW(P("x +"), ParseError);
  EXPECT_THROW(P("u_q"), MalformedJetIndex);
  ParseContext strict{[](const std::string&) { return std::nullopt; }, {}, false};
  EXPECT_THROW(parse("zz", strict), UnknownIdentifier);
}

TEST(Eval, SingularAndUnbound) {
  Assignment a{{Symbol::coordinate("x"), 0.0}};
  EXPECT_THROW(eval_numeric(P("1/x"), a), SingularEvaluation);
  EXPECT_THROW(eval_numeric(P("y"), a), UnboundSymbol);
}

TEST(IsZero, Identities) {
  EXPECT_TRUE(is_zero(P("sin(x)^2 + cos(x)^2 - 1")));
  EXPECT_TRUE(is_zero(P("exp(x + y) - exp(x)*exp(y)")));
  EXPECT_FALSE(is_zero(P("sin(x)^2 - cos(x)^2")));
  EXPECT_FALSE(is_zero(P("x*1e-3")));
}

TEST(TrigNormalForm, EqualClosedForms) {
  EXPECT_EQ(trig_normal_form(P("tan(x)*cos(x)")), trig_normal_form(P("sin(x)")));
  EXPECT_EQ(trig_normal_form(P("sin(x)^2")), trig_normal_form(P("1 - cos(x)^2")));
}

TEST(Diff, KnownDerivatives) {
  const Symbol x = Symbol::coordinate("x");
  EXPECT_TRUE(is_zero(diff(P("x^3"), x) - P("3*x^2")));
  EXPECT_TRUE(is_zero(diff(P("tan(x)"), x) - P("1/cos(x)^2")));
  EXPECT_TRUE(is_zero(diff(P("log(2 + x^2)"), x) - P("2*x/(2 + x^2)")));
  EXPECT_EQ(diff(P("y*u_x"), x), Expr(0));
}

TEST(Substitute, SimultaneousBindings) {
  const Symbol x = Symbol::coordinate("x"), y = Symbol::coordinate("y");
  const Expr e = substitute(P("x + 2*y"), {{x, Expr(y)}, {y, Expr(x)}});
  EXPECT_EQ(e, P("y + 2*x"));
}

TEST(Properties, DiffAgreesWithFiniteDifferences) {
  const auto r = oracle::diff_vs_finite_differences(50);
  EXPECT_EQ(r.checked, 50 * 3 * 3);
  EXPECT_EQ(r.failed, 0) << r.first_failure;
}

TEST(Properties, LinearityProductRuleSubstitution) {
  const auto r = oracle::kernel_pair_properties(200);
  EXPECT_EQ(r.checked, 200 * 2 * 3);
  EXPECT_EQ(r.failed, 0) << r.first_failure;
}
