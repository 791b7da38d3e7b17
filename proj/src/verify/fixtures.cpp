#include "lieinv/error.hpp"
#include "lieinv/verify.hpp"

#include <regex>

namespace lieinv {

namespace {

// Printed forms of the so(3) type I combinations; each omits its u_33 term.
const std::string kU11 =
    "u_x1x1*cos(x3)^2/cos(x2)^2 - u_x1x2*sin(2*x3)/cos(x2) + 2*u_x1x3*tan(x2)*cos(x3)^2/cos(x2) + "
    "u_x2x2*sin(x3)^2 - u_x2x3*tan(x2)*sin(2*x3) - u_x1*tan(x2)*sin(2*x3)/cos(x2) - "
    "u_x2*tan(x2)*cos(x3)^2 - u_x3*(1/2 + tan(x2)^2)*sin(2*x3)";
const std::string kU12 =
    "u_x1x1*sin(2*x3)/(2*cos(x2)^2) + u_x1x2*cos(2*x3)/cos(x2) + u_x1x3*tan(x2)*sin(2*x3)/cos(x2) - "
    "u_x2x2*sin(2*x3)/2 + u_x2x3*tan(x2)*cos(2*x3) + u_x1*tan(x2)*cos(2*x3)/cos(x2) - "
    "u_x2*tan(x2)*sin(2*x3)/2 + u_x3*(1/2 + tan(x2)^2)*cos(2*x3)";
const std::string kU22 =
    "u_x1x1*sin(x3)^2/cos(x2)^2 + u_x1x2*sin(2*x3)/cos(x2) + 2*u_x1x3*tan(x2)*sin(x3)^2/cos(x2) + "
    "u_x2x2*cos(x3)^2 + u_x2x3*tan(x2)*sin(2*x3) + u_x1*tan(x2)*sin(2*x3)/cos(x2) - "
    "u_x2*tan(x2)*sin(x3)^2 + u_x3*(1/2 + tan(x2)^2)*sin(2*x3)";

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
  return s;
}

// Type I entries are written for m = 2 (one invariant variable y).
std::vector<Fixture> type1_fixtures() {
  const PipelineKind I = PipelineKind::I;
  std::vector<Fixture> out;
  out.push_back({"1d", "g1", I,
                 {{"y", "y", ""}, {"u", "u", ""}, {"u_1", "u_x1", ""}, {"u_y", "u_y", ""},
                  {"u_11", "u_x1x1", ""}, {"u_1y", "u_x1y", ""}, {"u_yy", "u_yy", ""}},
                 "", ""});
  out.push_back({"2d-free", "2g1", I,
                 {{"y", "y", ""}, {"u", "u", ""}, {"u_1", "u_x1", ""}, {"u_2", "u_x2", ""},
                  {"u_y", "u_y", ""}, {"u_11", "u_x1x1", ""}, {"u_12", "u_x1x2", ""},
                  {"u_22", "u_x2x2", ""}, {"u_1y", "u_x1y", ""}, {"u_2y", "u_x2y", ""},
                  {"u_yy", "u_yy", ""}},
                 "", ""});
  out.push_back({"2d-free", "g2", I,
                 {{"y", "y", ""}, {"u", "u", ""}, {"u_(1)", "exp(x2)*u_x1", ""}, {"u_(2)", "u_x2", ""},
                  {"u_y", "u_y", ""}, {"u_(11)", "exp(2*x2)*u_x1x1", ""},
                  {"u_(12)", "exp(x2)*(u_x1x2 + u_x1/2)", ""}, {"u_(22)", "u_x2x2", ""},
                  {"u_(1)y", "exp(x2)*u_x1y", ""}, {"u_(2)y", "u_x2y", ""}, {"u_yy", "u_yy", ""}},
                 "", ""});
  out.push_back({"3d-free", "3g1", I,
                 {{"y", "y", ""}, {"u", "u", ""}, {"u_1", "u_x1", ""}, {"u_2", "u_x2", ""},
                  {"u_3", "u_x3", ""}, {"u_y", "u_y", ""}, {"u_11", "u_x1x1", ""},
                  {"u_12", "u_x1x2", ""}, {"u_13", "u_x1x3", ""}, {"u_22", "u_x2x2", ""},
                  {"u_23", "u_x2x3", ""}, {"u_33", "u_x3x3", ""}, {"u_1y", "u_x1y", ""},
                  {"u_2y", "u_x2y", ""}, {"u_3y", "u_x3y", ""}, {"u_yy", "u_yy", ""}},
                 "", ""});
  out.push_back({"3d-free", "g1+g2", I,
                 {{"y", "y", ""}, {"u", "u", ""}, {"u_(1)", "exp(x2)*u_x1", ""}, {"u_(2)", "u_x2", ""},
                  {"u_(3)", "u_x3", ""}, {"u_y", "u_y", ""}, {"u_(11)", "exp(2*x2)*u_x1x1", ""},
                  {"u_(12)", "exp(x2)*(u_x1x2 + u_x1/2)", ""}, {"u_(13)", "exp(x2)*u_x1x3", ""},
                  {"u_(22)", "u_x2x2", ""}, {"u_(23)", "u_x2x3", ""}, {"u_(33)", "u_x3x3", ""},
                  {"u_(1)y", "exp(x2)*u_x1y", ""}, {"u_(2)y", "u_x2y", ""}, {"u_(3)y", "u_x3y", ""},
                  {"u_yy", "u_yy", ""}},
                 "", ""});
  out.push_back({"3d-free", "g3_1", I,
                 {{"y", "y", ""}, {"u", "u", ""}, {"u_(1)", "u_x1", ""}, {"u_(2)", "x3*u_x1 + u_x2", ""},
                  {"u_(3)", "u_x3", ""}, {"u_y", "u_y", ""}, {"u_(11)", "u_x1x1", ""},
                  {"u_(12)", "x3*u_x1x1 + u_x1x2", ""}, {"u_(13)", "u_x1x3", ""},
                  {"u_(22)", "x3^2*u_x1x1 + 2*x3*u_x1x2 + u_x2x2", ""},
                  {"u_(23)", "x3*u_x1x3 + u_x2x3 + u_x1/2", ""}, {"u_(33)", "u_x3x3", ""},
                  {"u_(1)y", "u_x1y", ""}, {"u_(2)y", "x3*u_x1y + u_x2y", ""}, {"u_(3)y", "u_x3y", ""},
                  {"u_yy", "u_yy", ""}},
                 "", ""});
  out.push_back({"3d-free", "g3_2", I,
                 {{"y", "y", ""}, {"u", "u", ""}, {"u_(1)", "exp(x3)*u_x1", ""},
                  {"u_(2)", "exp(x3)*(x3*u_x1 + u_x2)", ""}, {"u_(3)", "u_x3", ""}, {"u_y", "u_y", ""},
                  {"u_(11)", "exp(2*x3)*u_x1x1", ""}, {"u_(12)", "exp(2*x3)*(x3*u_x1x1 + u_x1x2)", ""},
                  {"u_(13)", "exp(x3)*(u_x1x3 + u_x1/2)", ""}, {"u_(33)", "u_x3x3", ""},
                  {"u_(1)y", "exp(x3)*u_x1y", ""},
                  {"u_(22)", "exp(2*x3)*(x3^2*u_x1x1 + 2*x3*u_x1x2 + u_x2x2)", ""},
                  {"u_(23)", "exp(x3)*x3*(u_x1x3 + u_x1/2) + exp(x3)*(u_x2x3 + (u_x1 + u_x2)/2)", ""},
                  {"u_(2)y", "exp(x3)*(x3*u_x1y + u_x2y)", ""}, {"u_(3)y", "u_x3y", ""}, {"u_yy", "u_yy", ""}},
                 "", ""});
  out.push_back({"3d-free", "g3_3", I,
                 {{"y", "y", ""}, {"u", "u", ""}, {"u_(1)", "exp(x3)*u_x1", ""}, {"u_(2)", "exp(x3)*u_x2", ""},
                  {"u_(3)", "u_x3", ""}, {"u_y", "u_y", ""}, {"u_(11)", "exp(2*x3)*u_x1x1", ""},
                  {"u_(12)", "exp(2*x3)*u_x1x2", ""}, {"u_(13)", "exp(x3)*(u_x1x3 + u_x1/2)", ""},
                  {"u_(22)", "exp(2*x3)*u_x2x2", ""}, {"u_(23)", "exp(x3)*(u_x2x3 + u_x2/2)", ""},
                  {"u_(33)", "u_x3x3", ""}, {"u_(1)y", "exp(x3)*u_x1y", ""}, {"u_(2)y", "exp(x3)*u_x2y", ""},
                  {"u_(3)y", "u_x3y", ""}, {"u_yy", "u_yy", ""}},
                 "", ""});
  out.push_back({"3d-free", "g3_4", I,
                 {{"y", "y", ""}, {"u", "u", ""}, {"u_(1)", "exp(x3)*u_x1", ""}, {"u_(2)", "exp(h*x3)*u_x2", ""},
                  {"u_(3)", "u_x3", ""}, {"u_y", "u_y", ""}, {"u_(11)", "exp(2*x3)*u_x1x1", ""},
                  {"u_(12)", "exp((1 + h)*x3)*u_x1x2", ""}, {"u_(13)", "exp(x3)*(u_x1x3 + u_x1/2)", ""},
                  {"u_(22)", "exp(2*h*x3)*u_x2x2", ""}, {"u_(23)", "exp(h*x3)*(u_x2x3 + h*u_x2/2)", ""},
                  {"u_(33)", "u_x3x3", ""}, {"u_(1)y", "exp(x3)*u_x1y", ""}, {"u_(2)y", "exp(h*x3)*u_x2y", ""},
                  {"u_(3)y", "u_x3y", ""}, {"u_yy", "u_yy", ""}},
                 "", ""});
  out.push_back(
      {"3d-free", "g3_5", I,
       {{"y", "y", ""}, {"u", "u", ""}, {"u_(3)", "u_x3", ""}, {"u_y", "u_y", ""},
        {"u_(11)+u_(22)", "exp(2*p*x3)*(u_x1x1 + u_x2x2)", ""},
        {"u_(1)", "exp(p*x3)*(u_x1*cos(x3) - u_x2*sin(x3))", ""},
        {"u_(2)", "exp(p*x3)*(u_x1*sin(x3) + u_x2*cos(x3))", ""},
        {"u_(11)-u_(22)", "exp(2*p*x3)*((u_x1x1 - u_x2x2)*cos(2*x3) - 2*u_x1x2*sin(2*x3))", ""},
        {"2u_(12)", "exp(2*p*x3)*((u_x1x1 - u_x2x2)*sin(2*x3) + 2*u_x1x2*cos(2*x3))", ""},
        {"u_(13)",
         "exp(p*x3)*((u_x1x3 + (p*u_x1 - u_x2)/2)*cos(x3) - (u_x2x3 + (p*u_x2 + u_x1)/2)*sin(x3))", ""},
        {"u_(23)",
         "exp(p*x3)*((u_x1x3 + (p*u_x1 - u_x2)/2)*sin(x3) + (u_x2x3 + (p*u_x2 + u_x1)/2)*cos(x3))", ""},
        {"u_(1)y", "exp(p*x3)*(u_x1y*cos(x3) - u_x2y*sin(x3))", ""},
        {"u_(2)y", "exp(p*x3)*(u_x1y*sin(x3) + u_x2y*cos(x3))", ""}, {"u_(33)", "u_x3x3", ""},
        {"u_(3)y", "u_x3y", ""}, {"u_yy", "u_yy", ""}},
       "", ""});
  out.push_back(
      {"3d-free", "g3_6", I,
       {{"y", "y", ""}, {"u", "u", ""}, {"u_(1)", "exp(x2)*u_x1 + 2*x3*u_x2 + x3^2*u_x3", ""},
        {"u_(2)", "u_x2 + x3*u_x3", ""}, {"u_(3)", "u_x3", ""}, {"u_y", "u_y", ""},
        {"u_(11)/4",
         "exp(2*x2)*u_x1x1/4 + exp(x2)*x3*(u_x1x2 + (x3*u_x1x3 + u_x1)/2) + "
         "x3^2*(x3*u_x2x3 + u_x2x2 + (u_x2 + x3*u_x3)/2 + x3^2*u_x3x3/4)",
         ""},
        {"u_(12)",
         "exp(x2)*(u_x1x2 + x3*u_x1x3 + u_x1/2) + x3^3*u_x3x3 + 3*x3^2*(u_x2x3 + u_x3/2) + "
         "x3*(2*u_x2x2 + u_x2)",
         ""},
        {"u_(13)", "exp(x2)*u_x1x3 + x3^2*u_x3x3 + x3*(2*u_x2x3 + u_x3) + u_x2", ""},
        {"u_(22)", "x3^2*u_x3x3 + x3*(2*u_x2x3 + u_x3) + u_x2x2", ""},
        {"u_(23)", "x3*u_x3x3 + u_x2x3 + u_x3/2", ""}, {"u_(33)", "u_x3x3", ""},
        {"u_(2)y", "x3*u_x3y + u_x2y", ""}, {"u_(1)y", "exp(x2)*u_x1y + 2*x3*u_x2y + x3^2*u_x3y", ""},
        {"u_(3)y", "u_x3y", ""}, {"u_yy", "u_yy", ""}},
       "", ""});
  out.push_back(
      {"3d-free", "g3_7", I,
       {{"y", "y", ""}, {"u", "u", ""}, {"u_y", "u_y", ""}, {"u_(3)", "u_x3", ""},
        {"u_(1)", "u_x1*cos(x3)/cos(x2) - u_x2*sin(x3) + u_x3*tan(x2)*cos(x3)", ""},
        {"u_(2)", "u_x1*sin(x3)/cos(x2) + u_x2*cos(x3) + u_x3*tan(x2)*sin(x3)", ""},
        {"u^7_(11)",
         kU11 + " + u_x3x3*tan(x2)^2*cos(x3)^2", kU11},
        {"u^7_(12)",
         kU12 + " + u_x3x3*tan(x2)^2*sin(2*x3)/2", kU12},
        {"u^7_(22)",
         kU22 + " + u_x3x3*tan(x2)^2*sin(x3)^2", kU22},
        {"u_(33)", "u_x3x3", ""}, {"u_(3)y", "u_x3y", ""}, {"u_yy", "u_yy", ""},
        {"u_(13)",
         "u_x1x3*cos(x3)/cos(x2) - u_x2x3*sin(x3) + u_x3x3*cos(x3)*tan(x2) - u_x1*sin(x3)/(2*cos(x2)) - "
         "u_x2*cos(x3)/2 - u_x3*sin(x3)*tan(x2)/2",
         ""},
        {"u_(23)",
         "u_x1x3*sin(x3)/cos(x2) + u_x2x3*cos(x3) + u_x3x3*sin(x3)*tan(x2) + u_x1*cos(x3)/(2*cos(x2)) - "
         "u_x2*sin(x3)/2 + u_x3*cos(x3)*tan(x2)/2",
         ""},
        {"u_(1)y", "u_x1y*cos(x3)/cos(x2) - u_x2y*sin(x3) + u_x3y*cos(x3)*tan(x2)", ""},
        {"u_(2)y", "u_x1y*sin(x3)/cos(x2) + u_x2y*cos(x3) + u_x3y*sin(x3)*tan(x2)", ""}},
       "", ""});
  return out;
}

std::vector<Fixture> type2_fixtures() {
  const PipelineKind II = PipelineKind::II;
  std::vector<Fixture> out;
  out.push_back({"2d-transitive", "2g1", II, {{"v_1", "u_x", ""}, {"v_12", "u_xx", ""}}, "u_xx + b(u_x)", ""});
  out.push_back({"2d-transitive", "g2", II, {{"v_1", "exp(u)*u_x", ""}, {"v_12", "exp(2*u)*u_xx", ""}},
                 "u_xx + exp(-2*u)*b(exp(u)*u_x)", ""});
  out.push_back({"3d-transitive", "3g1", II,
                 {{"v_1", "u_x", ""}, {"v_2", "u_y", ""}, {"v_12", "u_xx", ""}, {"v_13", "u_xy", ""},
                  {"v_23", "u_yy", ""}},
                 "u_xx + a1(u_x, u_y)*u_xy + a2(u_x, u_y)*u_yy + b(u_x, u_y)", ""});
  out.push_back({"3d-transitive", "g1+g2", II,
                 {{"v_1", "exp(y)*u_x", ""}, {"v_2", "u_y", ""}, {"v_12", "exp(2*y)*u_xx", ""},
                  {"v_13", "exp(y)*u_xy", ""}, {"v_23", "u_yy", ""}},
                 "u_xx + exp(-y)*a1(exp(y)*u_x, u_y)*u_xy + exp(-2*y)*a2(exp(y)*u_x, u_y)*u_yy + "
                 "exp(-2*y)*b(exp(y)*u_x, u_y)",
                 ""});
  out.push_back({"3d-transitive", "g3_1", II,
                 {{"v_1", "u_x - y", ""}, {"v_2", "u_y", ""}, {"v_12", "u_xx", ""}, {"v_13", "u_xy", ""},
                  {"v_23", "u_yy", ""}},
                 "u_xx + a1(u_x - y, u_y)*u_xy + a2(u_x - y, u_y)*u_yy + b(u_x - y, u_y)", ""});
  out.push_back({"3d-transitive", "g3_2", II,
                 {{"v_1", "exp(-x)*u_x", ""}, {"v_2", "u_y - x", ""}, {"v_12", "exp(-x)*u_xx", ""},
                  {"v_13", "u_xy", ""}, {"v_23", "exp(x)*u_yy", ""}},
                 "exp(-x)*u_xx + a1(exp(-x)*u_x, u_y - x)*u_xy + a2(exp(-x)*u_x, u_y - x)*exp(x)*u_yy + "
                 "b(exp(-x)*u_x, u_y - x)",
                 "exp(-x)*u_xx + a1(exp(-x)*u_x, u_y - x)*u_xy + a2(exp(-x)*u_x, u_y - x)*u_yy + "
                 "b(exp(-x)*u_x, u_y - x)"});
  out.push_back({"3d-transitive", "g3_3", II,
                 {{"v_1", "exp(u)*u_x", ""}, {"v_2", "exp(u)*u_y", ""}, {"v_12", "exp(2*u)*u_xx", ""},
                  {"v_13", "exp(2*u)*u_xy", ""}, {"v_23", "exp(2*u)*u_yy", ""}},
                 "u_xx + a1(exp(u)*u_x, exp(u)*u_y)*u_xy + a2(exp(u)*u_x, exp(u)*u_y)*u_yy + "
                 "exp(-2*u)*b(exp(u)*u_x, exp(u)*u_y)",
                 "u_xx + a1(exp(u)*u_x, exp(u)*u_y) + a2(exp(u)*u_x, exp(u)*u_y)*u_yy + "
                 "exp(-2*u)*b(exp(u)*u_x, exp(u)*u_y)"});
  out.push_back({"3d-transitive", "g3_4", II,
                 {{"v_1", "exp(u)*u_x", ""}, {"v_2", "exp(h*u)*u_y", ""}, {"v_12", "exp(2*u)*u_xx", ""},
                  {"v_13", "exp((1 + h)*u)*u_xy", ""}, {"v_23", "exp(2*h*u)*u_yy", ""}},
                 "u_xx + exp((h - 1)*u)*a1(exp(u)*u_x, exp(h*u)*u_y)*u_xy + "
                 "exp(2*(h - 1)*u)*a2(exp(u)*u_x, exp(h*u)*u_y)*u_yy + exp(-2*u)*b(exp(u)*u_x, exp(h*u)*u_y)",
                 "u_xx + exp((h - 1)*u)*a1(exp(u)*u_x, exp(h*u)*u_y) + "
                 "exp(2*(h - 1)*u)*a2(exp(u)*u_x, exp(h*u)*u_y)*u_yy + exp(-2*u)*b(exp(u)*u_x, exp(h*u)*u_y)"});
  {
    const std::string v1 = "exp(p*u)*(u_x*cos(u) - u_y*sin(u))";
    const std::string v2 = "exp(p*u)*(u_x*sin(u) + u_y*cos(u))";
    std::string eq =
        "u_xx + u_yy + exp(-2*p*u)*b(V1, V2) + a1(V1, V2)*(u_xx - u_yy)*cos(2*u) - "
        "2*a1(V1, V2)*u_xy*sin(2*u) + a2(V1, V2)*(u_xx - u_yy)*sin(2*u) + 2*a2(V1, V2)*u_xy*cos(2*u)";
    eq = replace_all(replace_all(eq, "V1", v1), "V2", v2);
    out.push_back({"3d-transitive", "g3_5", II,
                   {{"v_1", v1, ""}, {"v_2", v2, ""}, {"v_12", "exp(2*p*u)*(u_xx + u_yy)", ""},
                    {"v_13", "exp(2*p*u)*((u_xx - u_yy)*cos(2*u) - 2*u_xy*sin(2*u))", ""},
                    {"v_23", "exp(2*p*u)*((u_xx - u_yy)*sin(2*u) + 2*u_xy*cos(2*u))",
                     "exp(2*p*u)*((u_xx - u_yy)*sin(2*u) + 2*u_xy*sin(2*u))"}},
                   eq, ""});
  }
  {
    const std::string v1 = "exp(y)*u_x + u_y^2";
    const std::string v2 = "u_y - u";
    std::string eq =
        "exp(2*y)*u_xx + 4*u*exp(y)*u_xy + 4*u^2*u_yy + 2*exp(y)*u_x*u_y + 4*u*u_y^2 - 4*u^2*u_y + "
        "a1(V1, V2)*(exp(y)*u_xy + 2*u*u_yy - u^2) + a2(V1, V2)*(u_yy - u) + b(V1, V2)";
    eq = replace_all(replace_all(eq, "V1", v1), "V2", v2);
    out.push_back({"3d-transitive", "g3_6", II,
                   {{"v_1", v1, ""}, {"v_2", v2, ""}, {"v_12", "u_yy - u", ""},
                    {"v_13", "exp(y)*u_xy + 2*u*u_yy - u^2", ""},
                    {"v_23", "exp(2*y)*u_xx + 2*u*(u*(2*u_yy + u_y - u) + exp(y)*(u_x + 2*u_xy))", ""}},
                   eq, ""});
  }
  {
    const std::string v1 = "u_x*cos(u)/cos(y) - u_y*sin(u) - cos(u)*tan(y)";
    const std::string v2 = "u_x*sin(u)/cos(y) + u_y*cos(u) - sin(u)*tan(y)";
    const std::string v2_printed = "u_x*sin(u)/cos(y)*u_x + u_y*cos(u) - sin(u)*tan(y)";
    const std::string p = "(u_xx/cos(y)^2 - u_yy - 2*u_x*u_y/cos(y) + u_y*tan(y))";
    const std::string q = "(-2*u_xy/cos(y) + u_y^2 + (1 - u_x^2)/cos(y)^2)";
    std::string eq = "u_xx/cos(y)^2 + u_yy - u_y*tan(y) + b(V1, V2) + (a1(V1, V2)*cos(2*u) - a2(V1, V2)*sin(2*u))*P + "
                     "(a1(V1, V2)*sin(2*u) + a2(V1, V2)*cos(2*u))*Q";
    eq = replace_all(replace_all(replace_all(replace_all(eq, "V1", v1), "V2", v2), "P", p), "Q", q);
    out.push_back({"3d-transitive", "g3_7", II,
                   {{"v_1", v1, ""}, {"v_2", v2, v2_printed}, {"v_12", "u_xx/cos(y)^2 + u_yy - u_y*tan(y)", ""},
                    {"v_13", "cos(2*u)*" + p + " + sin(2*u)*" + q, ""},
                    {"v_23", "-sin(2*u)*" + p + " + cos(2*u)*" + q, ""}},
                   eq, ""});
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> out = type1_fixtures();
    for (auto& f : type2_fixtures()) out.push_back(std::move(f));
    return out;
  }();
  return all;
}

std::vector<std::string> fixture_tables() { return {"1d", "2d-free", "3d-free", "2d-transitive", "3d-transitive"}; }

std::vector<Expr> fixture_exprs(const Fixture& f, const InvariantSet& inv) {
  static const std::regex mentions_y(R"((^|[^A-Za-z0-9_])y([^A-Za-z0-9_(]|$)|u_\w*y)");
  Bindings params;
  for (const auto& [k, v] : inv.params) params.emplace(Symbol::parameter(k), Expr(v));
  std::vector<Expr> out;
  for (const auto& fi : f.invariants) {
    if (f.pipeline == PipelineKind::I && inv.m == 1 && std::regex_search(fi.expr, mentions_y)) continue;
    out.push_back(substitute(inv.space.parse(fi.expr), params));
  }
  return out;
}

}  // namespace lieinv
