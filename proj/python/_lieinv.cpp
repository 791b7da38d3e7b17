#include "lieinv/covariant.hpp"
#include "lieinv/error.hpp"
#include "lieinv/invariants.hpp"
#include "lieinv/liealg.hpp"
#include "lieinv/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

namespace py = pybind11;
using namespace lieinv;

namespace {

// Structured results cross the boundary as JSON text; the Python package
// decodes them.
using Params = std::map<std::string, std::string>;

std::map<std::string, Rational> rationals(const Params& p) {
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : p) out[k] = parse_rational(v);
  return out;
}

SamplerConfig sampler(std::uint64_t seed, int points, double tol) {
  SamplerConfig s;
  s.seed = seed;
  s.points = points;
  s.tol = tol;
  return s;
}

std::string validate_file(const std::string& path) {
  nlohmann::json j{{"input", path}, {"valid", true}};
  try {
    validate(StructureConstants::from_file(path));
  } catch (const JacobiViolation& v) {
    j["valid"] = false;
    j["violation"] = {v.i(), v.j(), v.k(), v.l()};
  }
  return j.dump();
}

std::string invariants(const std::string& algebra, const std::string& pipeline, int m, const Params& params,
                       std::uint64_t seed, int points, double tol) {
  const SamplerConfig s = sampler(seed, points, tol);
  const AlgebraEntry e = catalog_lookup(algebra, rationals(params), s);
  if (pipeline != "free" && pipeline != "transitive")
    throw Error("cli", "pipeline must be 'free' or 'transitive', got '" + pipeline + "'");
  PipelineResult r = pipeline == "transitive" ? type2_pipeline(e, s) : type1_pipeline(e, m, s);
  verify_invariant_set(r.set, s);
  return to_json(r, seed).dump();
}

std::string reproduce(const std::vector<std::string>& tables, const std::map<std::string, std::vector<Params>>& params,
                      std::uint64_t seed, int points, double tol) {
  SuiteOptions o;
  o.tables = tables;
  o.sampler = sampler(seed, points, tol);
  for (const auto& [algebra, draws] : params)
    for (const auto& d : draws) o.params[algebra].push_back(rationals(d));
  return to_json(run_fixture_suite(o)).dump();
}

std::string covariant(const std::string& text, bool to, std::uint64_t seed) {
  SamplerConfig s;
  s.seed = seed;
  const PDEFile f = read_pde(text);
  if (to) {
    const CovariantPDE t = to_covariant({f.space, f.lhs});
    const RescaleReport rep = rescale_invariance_check(t, s);
    return nlohmann::json{{"lhs", render(t.lhs)},
                          {"kappa", t.kappa},
                          {"degree", to_string(rep.degree)},
                          {"rescale_invariant", rep.pass}}
        .dump();
  }
  const ScalarPDE e = from_covariant({f.space, f.lhs, 0}, s);
  return nlohmann::json{{"lhs", render(e.lhs)}}.dump();
}

std::string canonical(const std::string& expr, const std::vector<std::string>& coords, const std::string& dep) {
  return render(JetSpace(coords, dep).parse(expr));
}

bool zero(const std::string& expr, const std::vector<std::string>& coords, const std::string& dep, std::uint64_t seed) {
  SamplerConfig s;
  s.seed = seed;
  return is_zero(JetSpace(coords, dep).parse(expr), s);
}

}  // namespace

PYBIND11_MODULE(_lieinv, m) {
  m.doc() = "Native core of the lieinv package";
  const SamplerConfig d;

  static py::exception<Error> error(m, "LieinvError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, ("[" + e.module() + "] " + e.what()).c_str());
    }
  });

  m.def("catalog_names", &catalog_names);
  m.def("validate_file", &validate_file, py::arg("path"));
  m.def("invariants", &invariants, py::arg("algebra"), py::arg("pipeline") = "transitive", py::arg("m") = 2,
        py::arg("params") = Params{}, py::arg("seed") = d.seed, py::arg("points") = d.points, py::arg("tol") = d.tol);
  m.def("reproduce", &reproduce, py::arg("tables") = std::vector<std::string>{},
        py::arg("params") = std::map<std::string, std::vector<Params>>{}, py::arg("seed") = d.seed,
        py::arg("points") = d.points, py::arg("tol") = d.tol);
  m.def("covariant", &covariant, py::arg("text"), py::arg("to"), py::arg("seed") = d.seed);
  m.def("canonical", &canonical, py::arg("expr"), py::arg("coords"), py::arg("dep") = "u");
  m.def("is_zero", &zero, py::arg("expr"), py::arg("coords"), py::arg("dep") = "u", py::arg("seed") = d.seed);
}
