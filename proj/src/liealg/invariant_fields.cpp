#include "lieinv/error.hpp"
#include "lieinv/liealg.hpp"

namespace lieinv {

namespace {

using Matrix = std::vector<std::vector<Expr>>;

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<Expr>(n, Expr(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Expr(1);
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < n; ++k)
        if (!a[i][k].is_zero_const() && !b[k][j].is_zero_const()) terms.push_back(a[i][k] * b[k][j]);
      r[i][j] = trig_normal_form(make_add(std::move(terms)));
    }
  }
  return r;
}

Matrix minor_of(const Matrix& m, std::size_t row, std::size_t col) {
  Matrix r;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<Expr> line;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != col) line.push_back(m[i][j]);
    r.push_back(std::move(line));
  }
  return r;
}

Expr determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Expr(1);
  if (n == 1) return m[0][0];
  std::vector<Expr> terms;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero_const()) continue;
    Expr t = m[0][j] * determinant(minor_of(m, 0, j));
    terms.push_back(j % 2 == 0 ? t : -t);
  }
  return make_add(std::move(terms));
}

// Inverse via adjugate; entries are divided termwise when the determinant
// reduces to a single product.
Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  const Expr det = trig_normal_form(determinant(m));
  if (det.is_zero_const()) throw Error("liealg", "coefficient matrix is singular");
  const bool monomial = det.kind() != ExprKind::Add;
  const Expr inv_det = make_pow(det, -1);
  Matrix r(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Expr cof = trig_normal_form(determinant(minor_of(m, i, j)));
      if ((i + j) % 2 == 1) cof = -cof;
      r[j][i] = monomial ? trig_normal_form(cof * inv_det) : cof * inv_det;
    }
  }
  return r;
}

std::vector<VectorField> fields_from_inverse(const Matrix& inv, const std::vector<Symbol>& coords) {
  // field i has components (inv)_{k i}
  std::vector<VectorField> out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::vector<Expr> cs;
    for (std::size_t k = 0; k < coords.size(); ++k) cs.push_back(inv[k][i]);
    out.emplace_back(coords, std::move(cs));
  }
  return out;
}

bool field_is_zero(const VectorField& f, const SamplerConfig& s) {
  for (const auto& c : f.coefficients())
    if (!is_zero(c, s)) return false;
  return true;
}

}  // namespace

InvariantFields build_invariant_fields(const StructureConstants& c,
                                       std::vector<std::string> coordinate_names,
                                       const SamplerConfig& sampler) {
  validate(c);
  const int n = c.dim();
  if (n > 4) throw Unsupported("liealg", "field construction is limited to dimension 4");
  if (coordinate_names.empty())
    for (int i = 1; i <= n; ++i) coordinate_names.push_back("z" + std::to_string(i));
  if (coordinate_names.size() != static_cast<std::size_t>(n))
    throw Error("liealg", "need one coordinate name per basis element");

  InvariantFields out;
  for (const auto& name : coordinate_names) out.coordinates.push_back(Symbol::coordinate(name));

  const auto& z = out.coordinates;
  std::vector<std::vector<std::vector<Rational>>> ads;
  for (int k = 1; k <= n; ++k) ads.push_back(c.ad(k));

  // Left Maurer-Cartan matrix: column k = exp(-z1 ad e1) ... exp(-z_{k-1} ad e_{k-1}) e_k.
  Matrix a(n, std::vector<Expr>(n));
  Matrix prefix = identity(n);
  for (int k = 0; k < n; ++k) {
    for (int r = 0; r < n; ++r) a[r][k] = prefix[r][k];
    if (k + 1 < n) prefix = multiply(prefix, exp_matrix(ads[k], -Expr(z[k])));
  }
  // Right matrix: column k = exp(zn ad en) ... exp(z_{k+1} ad e_{k+1}) e_k.
  Matrix b(n, std::vector<Expr>(n));
  Matrix suffix = identity(n);
  for (int k = n - 1; k >= 0; --k) {
    for (int r = 0; r < n; ++r) b[r][k] = suffix[r][k];
    if (k > 0) suffix = multiply(suffix, exp_matrix(ads[k], Expr(z[k])));
  }
  out.xi = fields_from_inverse(inverse(a), z);
  out.eta = fields_from_inverse(inverse(b), z);

  const auto report = verify_realization(out.xi, out.eta, c, sampler);
  if (!report.pass) {
    std::string failed;
    for (const auto& p : report.pairs)
      if (!p.pass) failed += (failed.empty() ? "" : ", ") + p.relation;
    throw VerificationFailed("liealg", "constructed fields violate " + failed);
  }
  return out;
}

RealizationReport verify_realization(const std::vector<VectorField>& xi,
                                     const std::vector<VectorField>& eta,
                                     const StructureConstants& c, const SamplerConfig& sampler) {
  RealizationReport report;
  const int n = c.dim();
  if (xi.size() != static_cast<std::size_t>(n) || eta.size() != static_cast<std::size_t>(n))
    throw Error("liealg", "realization dimension does not match the algebra");
  auto combo = [&](const std::vector<VectorField>& fs, int i, int j, const Rational& sign) {
    VectorField r = commutator(fs[i - 1], fs[j - 1]);
    for (int k = 1; k <= n; ++k) {
      const Rational ck = c.get(i, j, k);
      if (ck != 0) r = r - fs[k - 1].scaled(Expr(sign * ck));
    }
    return r;
  };
  auto record = [&](std::string rel, const VectorField& residual) {
    PairCheck p{std::move(rel), field_is_zero(residual, sampler)};
    report.pass = report.pass && p.pass;
    report.pairs.push_back(std::move(p));
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      record("[xi_" + std::to_string(i) + ",xi_" + std::to_string(j) + "]", combo(xi, i, j, 1));
      record("[eta_" + std::to_string(i) + ",eta_" + std::to_string(j) + "]", combo(eta, i, j, -1));
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      record("[xi_" + std::to_string(i) + ",eta_" + std::to_string(j) + "]",
             commutator(xi[i - 1], eta[j - 1]));
  return report;
}

Expr field_determinant(const std::vector<VectorField>& fields) {
  Matrix m;
  for (const auto& f : fields) m.push_back(f.coefficients());
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error("liealg", "determinant needs as many fields as coordinates");
  return determinant(m);
}

}  // namespace lieinv
