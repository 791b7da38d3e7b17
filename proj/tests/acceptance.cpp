// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "lieinv/covariant.hpp"
#include "lieinv/error.hpp"
#include "lieinv/invariants.hpp"
#include "lieinv/liealg.hpp"
#include "lieinv/verify.hpp"
#include "support/properties.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <iostream>
#include <functional>
#include <set>
#include <span>
#include <sstream>

using namespace lieinv;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<RowResult> rows_of(const SuiteReport& r, const std::vector<std::string>& tables) {
  std::vector<RowResult> out;
  for (const auto& row : r.rows)
    if (std::find(tables.begin(), tables.end(), row.table) != tables.end()) out.push_back(row);
  return out;
}

std::string failures(const std::vector<RowResult>& rows) {
  std::string s;
  for (const auto& r : rows)
    if (!r.pass) {
      s += " " + r.algebra + (r.m ? "/m=" + std::to_string(r.m) : "") + ":";
      for (const auto& f : r.failures) s += " " + f + ";";
    }
  return s;
}

bool all_pass(const std::vector<RowResult>& rows) {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const RowResult& r) { return r.pass; });
}

const RowResult* find_row(const std::vector<RowResult>& rows, const std::string& algebra) {
  for (const auto& r : rows)
    if (r.algebra == algebra) return &r;
  return nullptr;
}

Outcome criterion1(const SuiteReport& suite) {
  const auto rows = rows_of(suite, {"2d-transitive"});
  const RowResult* a = find_row(rows, "2g1");
  const RowResult* b = find_row(rows, "g2");
  Outcome o;
  o.pass = rows.size() == 2 && a && b && all_pass(rows) && a->equivalent && b->equivalent;
  o.detail = std::to_string(rows.size()) + " rows" + failures(rows);
  return o;
}

Outcome criterion2(const SuiteReport& suite) {
  const auto rows = rows_of(suite, {"3d-transitive"});
  std::set<std::string> labels;
  for (const auto& r : rows) labels.insert(r.algebra);
  const std::vector<std::string> required{"3g1",          "g1+g2",         "g3_1",      "g3_2",      "g3_3",
                                          "g3_4(h=1/2)",  "g3_4(h=-1)",    "g3_4(h=-1/3)", "g3_5(p=0)", "g3_5(p=1)",
                                          "g3_6",         "g3_7"};
  bool covered = true;
  std::string missing;
  for (const auto& r : required)
    if (!labels.count(r)) {
      covered = false;
      missing += " missing " + r;
    }
  bool templates = std::all_of(rows.begin(), rows.end(), [](const RowResult& r) { return r.templates_annihilated; });
  return {covered && templates && all_pass(rows),
          std::to_string(rows.size()) + " rows (9 algebras, g3_4 x3, g3_5 x2), 5 templates each" + missing +
              failures(rows)};
}

Outcome criterion3(const SuiteReport& suite) {
  const auto rows = rows_of(suite, {"1d", "2d-free", "3d-free"});
  std::set<int> ms;
  for (const auto& r : rows) ms.insert(r.m);
  const bool g2 = std::any_of(rows.begin(), rows.end(), [](const RowResult& r) { return r.algebra == "g2" && r.pass; });
  const bool g37 = std::any_of(rows.begin(), rows.end(), [](const RowResult& r) { return r.algebra == "g3_7" && r.pass; });
  return {all_pass(rows) && ms == std::set<int>{1, 2} && g2 && g37,
          std::to_string(rows.size()) + " rows over m in {1, 2}" + failures(rows)};
}

Outcome criterion4(const SamplerConfig& s) {
  const So3Report r = so3_worked_example(s);
  std::ostringstream d;
  d << "xi " << (r.xi_match ? "match" : "MISMATCH") << ", eta " << (r.eta_match ? "match" : "MISMATCH")
    << ", first order " << (r.first_order_equivalent ? "equivalent" : "NOT equivalent") << ", identity residual "
    << r.identity_error << " (printed labels t12/t23: " << r.printed_identity_error << ")";
  return {r.pass(), d.str()};
}

Outcome criterion5(const SamplerConfig& s) {
  int ok = 0, total = 0;
  std::string bad;
  for (const auto& [name, text] : oracle::pde_battery()) {
    ++total;
    try {
      const PDEFile f = read_pde(text);
      const CovariantPDE t = to_covariant({f.space, f.lhs});
      const bool invariant = rescale_invariance_check(t, s).pass;
      const ScalarPDE back = from_covariant(t, s);
      const bool round = is_zero(back.lhs - f.lhs, s);
      const JInvariants J = J_invariants(t.space);
      bool jok = true;
      std::vector<Expr> all = J.normalized_first;
      all.insert(all.end(), J.normalized_second.begin(), J.normalized_second.end());
      for (const auto& e : all) {
        jok = jok && is_zero(euler_operator(t.space, e), s);
        for (std::size_t j = 0; j < t.space.dim(); ++j) jok = jok && is_zero(rescale_operator(t.space, j, e), s);
      }
      if (invariant && round && jok)
        ++ok;
      else
        bad += " " + name;
    } catch (const Error& e) {
      bad += " " + name + " (" + e.what() + ")";
    }
  }
  return {ok == total && total == 10, std::to_string(ok) + "/" + std::to_string(total) + " PDEs" + bad};
}

Outcome criterion6(const SamplerConfig& s) {
  int checked = 0;
  std::string bad;
  for (const auto& name : catalog_names()) {
    for (const auto& p : random_parameter_draws(name, 3, s.seed)) {
      const AlgebraEntry e = catalog_lookup(name, p, s);
      const std::string label = entry_label(e);
      for (const InvariantFields* f : {&e.free, &e.transitive}) {
        if (f->xi.empty()) continue;
        ++checked;
        if (!verify_realization(f->xi, f->eta, e.constants, s).pass) bad += " " + label + " realization;";
        SamplerConfig det = s;
        det.points = 16;
        const Expr d = field_determinant(f->xi);
        const auto values = sample_values(std::span<const Expr>(&d, 1), det);
        const bool nonzero = values.size() == 16 &&
                             std::all_of(values.begin(), values.end(), [](const auto& v) { return std::abs(v[0]) > 1e-12; });
        if (!nonzero) bad += " " + label + " det;";
      }
      try {
        const InvariantFields built = build_invariant_fields(e.constants, {}, s);
        if (!verify_realization(built.xi, built.eta, e.constants, s).pass) bad += " " + label + " built;";
      } catch (const Error& err) {
        bad += " " + label + " built (" + err.what() + ");";
      }
    }
  }
  return {bad.empty(), std::to_string(checked) + " realizations gated" + bad};
}

Outcome criterion7(const SamplerConfig& s) {
  std::string detail;
  bool pass = true;
  int rejected = 0, total = 0;
  for (const auto& nc : negative_controls(s)) {
    total += static_cast<int>(nc.rejected.size());
    rejected += static_cast<int>(std::count(nc.rejected.begin(), nc.rejected.end(), true));
    if (!nc.pass) detail += " " + nc.algebra + " accepted a perturbation;";
  }
  pass = pass && rejected == total && total == 3 * static_cast<int>(catalog_names().size());
  detail = std::to_string(rejected) + "/" + std::to_string(total) + " perturbations rejected" + detail;

  bool jacobi = false;
  try {
    validate(StructureConstants::from_file(std::string(LIEINV_DATA_DIR) + "/algebras/bad.json"));
  } catch (const JacobiViolation& v) {
    const auto q = oracle::jacobi_scan(StructureConstants::from_file(std::string(LIEINV_DATA_DIR) + "/algebras/bad.json"));
    jacobi = q.found && q.i == v.i() && q.j == v.j() && q.k == v.k() && q.l == v.l();
  }
  detail += jacobi ? ", Jacobi violation rejected" : ", Jacobi violation NOT rejected";

  bool residual = false;
  const AlgebraEntry g2 = catalog_lookup("g2", {}, s);
  const JetSpace w(transitive_coordinates(2), "w");
  try {
    eliminate_w(w, {symmetrized_invariant(w, g2.transitive.eta, {0})}, s);
  } catch (const ResidualDependence&) {
    residual = true;
  }
  detail += residual ? ", raw w_(1) raises ResidualDependence" : ", raw w_(1) NOT rejected";
  return {pass && jacobi && residual, detail};
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

Outcome criterion8() {
  const std::string cmd = std::string("\"") + LIEINV_CLI + "\" reproduce all --seed 7 --format json";
  int s1 = 0, s2 = 0;
  const std::string a = run_command(cmd, s1);
  const std::string b = run_command(cmd, s2);
  const bool same = !a.empty() && a == b;
  return {same && s1 == 0 && s2 == 0,
          std::to_string(a.size()) + " bytes, " + (same ? "byte-identical" : "DIFFERENT") + ", exit " +
              std::to_string(s1) + "/" + std::to_string(s2)};
}

Outcome criterion9() {
  const auto pairs = oracle::kernel_pair_properties(200);
  const auto fd = oracle::diff_vs_finite_differences(50);
  std::string detail = "200 pairs: " + std::to_string(pairs.checked - pairs.failed) + "/" +
                       std::to_string(pairs.checked) + " checks; 50 expressions vs FD: " +
                       std::to_string(fd.checked - fd.failed) + "/" + std::to_string(fd.checked);
  if (pairs.failed) detail += "; " + pairs.first_failure;
  if (fd.failed) detail += "; " + fd.first_failure;
  return {pairs.failed == 0 && fd.failed == 0, detail};
}

}  // namespace

int main() {
  SamplerConfig s;  // 32 points, tol 1e-7
  SuiteOptions opts;
  opts.sampler = s;
  SuiteReport suite;
  std::string suite_error;
  try {
    suite = run_fixture_suite(opts);
  } catch (const std::exception& e) {
    suite_error = e.what();
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction, type II 2D", [&] { return criterion1(suite); }},
      {"table reproduction, type II 3D", [&] { return criterion2(suite); }},
      {"table reproduction, type I", [&] { return criterion3(suite); }},
      {"so(3) worked example", [&] { return criterion4(s); }},
      {"covariant-form properties", [&] { return criterion5(s); }},
      {"realization gate", [&] { return criterion6(s); }},
      {"negative controls", [&] { return criterion7(s); }},
      {"determinism", [&] { return criterion8(); }},
      {"kernel property suite", [&] { return criterion9(); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
      if (i < 3 && !suite_error.empty()) o = {false, "suite error: " + suite_error};
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
