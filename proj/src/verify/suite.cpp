#include "lieinv/error.hpp"
#include "lieinv/parse.hpp"
#include "lieinv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lieinv {

namespace {

constexpr int kTemplateDraws = 5;
constexpr int kEquationDraws = 2;

bool all_annihilated(const InvariantSet& inv, const std::vector<ProlongedField>& pro, const std::vector<Expr>& es,
                     const std::vector<std::string>& labels, const std::string& what, const SamplerConfig& s,
                     std::vector<std::string>& failures) {
  bool ok = true;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!annihilation_check(inv.space, pro, es[i], s)) {
      ok = false;
      failures.push_back(what + " " + (i < labels.size() ? labels[i] : std::to_string(i + 1)) + " not annihilated");
    }
  }
  return ok;
}

RowResult run_row(const Fixture& f, const AlgebraEntry& entry, int m, const SamplerConfig& s) {
  RowResult row;
  row.table = f.table;
  row.algebra = entry_label(entry);
  row.m = m;
  try {
    PipelineResult r = f.pipeline == PipelineKind::I ? type1_pipeline(entry, m, s) : type2_pipeline(entry, s);
    const InvariantSet& inv = r.set;
    const auto pro = prolong_all(inv.space, inv.generators);

    const std::vector<Expr> fixture = fixture_exprs(f, inv);
    std::vector<std::string> fixture_labels;
    for (const auto& fi : f.invariants) fixture_labels.push_back(fi.label);
    if (fixture.size() != f.invariants.size()) fixture_labels.clear();  // y-entries dropped for m = 1
    std::vector<std::string> gen_labels;
    for (const auto& li : inv.invariants) gen_labels.push_back(li.label);

    row.fixture_annihilated = all_annihilated(inv, pro, fixture, fixture_labels, "fixture", s, row.failures);
    row.generated_annihilated = all_annihilated(inv, pro, inv.exprs(), gen_labels, "generated", s, row.failures);

    const Equivalence eq = equivalence(inv.space, inv.exprs(), fixture, s);
    row.rank_generated = eq.rank_a;
    row.rank_fixture = eq.rank_b;
    row.rank_union = eq.rank_union;
    row.equivalent = eq.equivalent();
    if (!row.equivalent) row.failures.push_back("generated and fixture sets are not functionally equivalent");
    row.expected_rank = static_cast<int>(inv.space.all_symbols().size()) - static_cast<int>(entry.constants.dim());
    if (row.rank_generated != row.expected_rank || row.rank_generated != static_cast<int>(inv.invariants.size()))
      row.failures.push_back("rank " + std::to_string(row.rank_generated) + " of " +
                             std::to_string(inv.invariants.size()) + " generated invariants, expected " +
                             std::to_string(row.expected_rank));

    row.templates_annihilated = true;
    for (int k = 0; k < kTemplateDraws; ++k) {
      if (!annihilation_check(inv.space, pro, instantiate_heads(r.equation.lhs, s.seed, k), s)) {
        row.templates_annihilated = false;
        row.failures.push_back("template instantiation " + std::to_string(k + 1) + " not annihilated");
      }
    }

    if (!f.equation.empty()) {
      Bindings params;
      for (const auto& [k, v] : inv.params) params.emplace(Symbol::parameter(k), Expr(v));
      const Expr eq_lhs = substitute(inv.space.parse(f.equation), params);
      for (int k = 0; k < kEquationDraws; ++k) {
        if (!equation_invariance_check(inv.space, pro, instantiate_heads(eq_lhs, s.seed, 100 + k),
                                       inv.space.jet(0, 0), s)) {
          row.equation_invariant = false;
          row.failures.push_back("table equation instantiation " + std::to_string(k + 1) + " not invariant");
        }
      }
    }
  } catch (const Error& e) {
    row.failures.push_back("[" + e.module() + "] " + e.what());
  }
  row.pass = row.failures.empty();
  return row;
}

}  // namespace

SuiteReport run_fixture_suite(const SuiteOptions& opts) {
  for (const auto& t : opts.tables) {
    const auto known = fixture_tables();
    if (std::find(known.begin(), known.end(), t) == known.end()) throw Error("verify", "unknown table '" + t + "'");
  }
  SuiteReport report;
  report.seed = opts.sampler.seed;
  for (const auto& table : fixture_tables()) {
    if (!opts.tables.empty() && std::find(opts.tables.begin(), opts.tables.end(), table) == opts.tables.end())
      continue;
    for (const auto& f : fixtures()) {
      if (f.table != table) continue;
      auto it = opts.params.find(f.algebra);
      const auto draws = it != opts.params.end() ? it->second : catalog_parameter_draws(f.algebra);
      for (const auto& p : draws) {
        std::vector<int> ms = f.pipeline == PipelineKind::I ? std::vector<int>{1, 2} : std::vector<int>{0};
        for (int m : ms) {
          try {
            const AlgebraEntry entry = catalog_lookup(f.algebra, p, opts.sampler);
            report.rows.push_back(run_row(f, entry, m, opts.sampler));
          } catch (const Error& e) {
            RowResult row;
            row.table = f.table;
            row.algebra = f.algebra;
            row.m = m;
            row.failures.push_back("[" + e.module() + "] " + e.what());
            report.rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  report.pass = !report.rows.empty() &&
                std::all_of(report.rows.begin(), report.rows.end(), [](const RowResult& r) { return r.pass; });
  return report;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j;
    j["table"] = row.table;
    j["algebra"] = row.algebra;
    if (row.m > 0) j["m"] = row.m;
    j["fixture_annihilated"] = row.fixture_annihilated;
    j["generated_annihilated"] = row.generated_annihilated;
    j["equivalent"] = row.equivalent;
    j["templates_annihilated"] = row.templates_annihilated;
    j["equation_invariant"] = row.equation_invariant;
    j["rank"] = {{"generated", row.rank_generated},
                 {"fixture", row.rank_fixture},
                 {"union", row.rank_union},
                 {"expected", row.expected_rank}};
    j["failures"] = row.failures;
    j["pass"] = row.pass;
    rows.push_back(std::move(j));
  }
  return {{"seed", r.seed}, {"pass", r.pass}, {"rows", rows}};
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& row : r.rows) {
    std::string name = row.algebra + (row.m > 0 ? " m=" + std::to_string(row.m) : "");
    out << (row.pass ? "PASS" : "FAIL") << "  " << row.table << std::string(15 - std::min<std::size_t>(14, row.table.size()), ' ')
        << name << std::string(22 - std::min<std::size_t>(21, name.size()), ' ') << "rank " << row.rank_generated << "/"
        << row.expected_rank << " fixture " << row.rank_fixture << " union " << row.rank_union << "\n";
    for (const auto& f : row.failures) out << "      " << f << "\n";
  }
  const auto passed = std::count_if(r.rows.begin(), r.rows.end(), [](const RowResult& x) { return x.pass; });
  out << passed << "/" << r.rows.size() << " rows passed (seed " << r.seed << ")\n";
  return out.str();
}

std::string to_csv(const SuiteReport& r) {
  std::ostringstream out;
  out << "table,algebra,m,fixture_annihilated,generated_annihilated,equivalent,templates_annihilated,"
         "equation_invariant,rank_generated,rank_fixture,rank_union,rank_expected,pass\n";
  for (const auto& row : r.rows) {
    out << row.table << ",\"" << row.algebra << "\"," << row.m << "," << row.fixture_annihilated << ","
        << row.generated_annihilated << "," << row.equivalent << "," << row.templates_annihilated << ","
        << row.equation_invariant << "," << row.rank_generated << "," << row.rank_fixture << ","
        << row.rank_union << "," << row.expected_rank << "," << row.pass << "\n";
  }
  return out.str();
}

So3Report so3_worked_example(const SamplerConfig& s) {
  So3Report rep;
  const AlgebraEntry entry = catalog_lookup("g3_7", {}, s);
  const InvariantFields built = build_invariant_fields(entry.constants, {"z1", "z2", "z3"}, s);

  ParseContext ctx;
  ctx.resolve = [&](const std::string& n) -> std::optional<Symbol> {
    for (Symbol c : built.coordinates)
      if (c.name() == n) return c;
    return std::nullopt;
  };
  ctx.allow_heads = false;
  auto same = [&](const std::vector<VectorField>& fields, const std::vector<std::vector<const char*>>& printed) {
    for (std::size_t i = 0; i < printed.size(); ++i)
      for (std::size_t k = 0; k < printed[i].size(); ++k)
        if (trig_normal_form(fields[i][k]) != trig_normal_form(parse(printed[i][k], ctx))) return false;
    return true;
  };
  rep.xi_match = same(built.xi, {{"1", "0", "0"},
                                 {"sin(z1)*tan(z2)", "cos(z1)", "sin(z1)/cos(z2)"},
                                 {"cos(z1)*tan(z2)", "-sin(z1)", "cos(z1)/cos(z2)"}});
  rep.eta_match = same(built.eta, {{"cos(z3)/cos(z2)", "-sin(z3)", "cos(z3)*tan(z2)"},
                                   {"sin(z3)/cos(z2)", "cos(z3)", "sin(z3)*tan(z2)"},
                                   {"0", "0", "1"}});

  const PipelineResult r = type2_pipeline(entry, s);
  const JetSpace& j = r.set.space;
  auto p = [&](const std::string& t) { return j.parse(t); };
  const Expr v1 = p("u_x*cos(u)/cos(y) - u_y*sin(u) - cos(u)*tan(y)");
  const Expr v2 = p("u_x*sin(u)/cos(y) + u_y*cos(u) - sin(u)*tan(y)");
  rep.first_order_equivalent = equivalence_check(j, r.set.first_order_exprs(), {v1, v2}, s);

  const Expr v12 = p(
      "(u_xx*u_y^2 + 2*u_xy*u_y*(sin(y) - u_x) + u_yy*(u_x - sin(y))^2 + (1 - u_y^2)*u_y*sin(2*y)/2 - "
      "3*u_x*u_y*cos(y) - 2*(1 + u_x^2)*u_y*tan(y) + 4*u_x*u_y/cos(y))/cos(y)^2");
  const Expr v13 = p(
      "u_xx*cos(u)^2/cos(y)^2 - u_xy*sin(2*u)/cos(y) + u_yy*sin(u)^2 + (u_y^2 - u_x^2/cos(y)^2)*sin(2*u)/2 - "
      "u_x*u_y*cos(2*u)/cos(y) - u_y*tan(y)*sin(u)^2 + sin(2*u)/(1 + cos(2*y))");
  const Expr v23 = p(
      "u_xx*sin(u)^2/cos(y)^2 + u_xy*sin(2*u)/cos(y) + u_yy*cos(u)^2 - ((1 - u_x^2)/cos(y)^2 + u_y^2)*sin(2*u)/2 + "
      "u_x*u_y*cos(2*u)/cos(y) - u_y*cos(u)^2*tan(y)");
  const std::string P = "(u_xx/cos(y)^2 - u_yy - 2*u_x*u_y/cos(y) + u_y*tan(y))";
  const std::string Q = "(-2*u_xy/cos(y) + u_y^2 + (1 - u_x^2)/cos(y)^2)";
  const Expr t12 = p("u_xx/cos(y)^2 + u_yy - u_y*tan(y)");
  const Expr t13 = p("cos(2*u)*" + P + " + sin(2*u)*" + Q);
  const Expr t23 = p("-sin(2*u)*" + P + " + cos(2*u)*" + Q);

  const Expr r12 = (v12 - make_pow(v1, 2) * v23 - make_pow(v2, 2) * v13) / (v1 * v2);
  // Printed pairing first, then the pairing that holds (t12 and t23 swap right-hand sides).
  const std::vector<Expr> sides{t12, r12, t13, v13 - v23, t23, v13 + v23,
                                t23, r12, t13, v13 - v23, t12, v13 + v23};
  const auto rows = sample_values(sides, s);
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < sides.size(); k += 2) {
      const double scale = std::max({1.0, std::abs(row[k]), std::abs(row[k + 1])});
      double& err = k < 6 ? rep.printed_identity_error : rep.identity_error;
      err = std::max(err, std::abs(row[k] - row[k + 1]) / scale);
    }
  }
  rep.identities_hold = rep.identity_error <= 1e-9;
  return rep;
}

}  // namespace lieinv
