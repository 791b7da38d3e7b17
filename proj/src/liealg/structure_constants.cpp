#include "lieinv/error.hpp"
#include "lieinv/liealg.hpp"
#include "lieinv/parse.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace lieinv {

StructureConstants::StructureConstants(int dim) : dim_(dim) {
  if (dim < 0) throw Error("liealg", "negative dimension");
}

void StructureConstants::set(int i, int j, int k, const Rational& c) {
  if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
    throw Error("liealg", "structure constant index out of range");
  if (i == j) {
    if (c != 0) throw Error("liealg", "[e_i, e_i] must vanish");
    return;
  }
  if (i > j) {
    set(j, i, k, -c);
    return;
  }
  if (c == 0) {
    c_.erase({i, j, k});
  } else {
    c_[{i, j, k}] = c;
  }
}

Rational StructureConstants::get(int i, int j, int k) const {
  if (i == j) return 0;
  if (i > j) return -get(j, i, k);
  auto it = c_.find({i, j, k});
  return it == c_.end() ? Rational(0) : it->second;
}

std::vector<std::vector<Rational>> StructureConstants::ad(int k) const {
  std::vector<std::vector<Rational>> m(dim_, std::vector<Rational>(dim_));
  for (int r = 1; r <= dim_; ++r)
    for (int j = 1; j <= dim_; ++j) m[r - 1][j - 1] = get(k, j, r);
  return m;
}

std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> StructureConstants::brackets() const {
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> out;
  for (const auto& [key, c] : c_) {
    const auto& [i, j, k] = key;
    out[{i, j}].emplace_back(k, c);
  }
  return out;
}

namespace {

Rational read_coefficient(const nlohmann::json& v, const std::map<std::string, Rational>& params) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    return Rational(v.get<long long>());
  } else if (v.is_number()) {
    text = v.dump();
  } else {
    throw Error("liealg", "structure constant must be a number or a string");
  }
  ParseContext ctx;
  ctx.resolve = [&](const std::string& n) -> std::optional<Symbol> {
    if (params.count(n)) return Symbol::parameter(n);
    return std::nullopt;
  };
  ctx.allow_heads = false;
  Bindings b;
  for (const auto& [name, value] : params) b.emplace(Symbol::parameter(name), Expr(value));
  Expr e = substitute(parse(text, ctx), b);
  if (!e.is_const()) throw Error("liealg", "structure constant '" + text + "' is not a rational");
  return e.value();
}

}  // namespace

StructureConstants StructureConstants::from_json(const std::string& text,
                                                 const std::map<std::string, Rational>& overrides) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("liealg", std::string("invalid algebra JSON: ") + e.what());
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw Error("liealg", "algebra JSON needs an integer \"dim\"");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw Error("liealg", "\"dim\" must be positive");

  std::map<std::string, Rational> params;
  if (j.contains("params")) {
    for (const auto& [name, v] : j["params"].items()) {
      params[name] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long long>());
    }
  }
  for (const auto& [name, v] : overrides) params[name] = v;

  StructureConstants c(dim);
  for (const auto& br : j.value("brackets", nlohmann::json::array())) {
    const int i = br.at("i").get<int>();
    const int jj = br.at("j").get<int>();
    if (i >= jj) throw Error("liealg", "brackets must be given with i < j");
    for (const auto& t : br.value("terms", nlohmann::json::array())) {
      const int k = t.at("k").get<int>();
      c.set(i, jj, k, c.get(i, jj, k) + read_coefficient(t.at("c"), params));
    }
  }
  return c;
}

StructureConstants StructureConstants::from_file(const std::string& path,
                                                 const std::map<std::string, Rational>& overrides) {
  std::ifstream in(path);
  if (!in) throw Error("liealg", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str(), overrides);
}

void validate(const StructureConstants& c) {
  const int n = c.dim();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          Rational s = 0;
          for (int m = 1; m <= n; ++m) {
            s += c.get(i, j, m) * c.get(m, k, l) + c.get(j, k, m) * c.get(m, i, l) +
                 c.get(k, i, m) * c.get(m, j, l);
          }
          if (s != 0) throw JacobiViolation(i, j, k, l);
        }
      }
    }
  }
}

}  // namespace lieinv
