#include "lieinv/error.hpp"
#include "lieinv/liealg.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace lieinv;

namespace {

std::string data(const std::string& name) { return std::string(LIEINV_DATA_DIR) + "/algebras/" + name; }

}  // namespace

TEST(StructureConstants, Antisymmetry) {
  StructureConstants c(3);
  c.set(1, 2, 3, 1);
  EXPECT_EQ(c.get(2, 1, 3), -1);
  EXPECT_EQ(c.get(1, 1, 3), 0);
}

TEST(StructureConstants, ParametersInFiles) {
  const auto c = StructureConstants::from_file(data("g3_4.json"));
  EXPECT_EQ(c.get(2, 3, 2), Rational(1, 2));
  const auto d = StructureConstants::from_file(data("g3_4.json"), {{"h", Rational(-1, 3)}});
  EXPECT_EQ(d.get(2, 3, 2), Rational(-1, 3));
}

TEST(Validate, AgreesWithBruteForceScan) {
  for (const char* f : {"so3.json", "abelian3.json", "g3_4.json"}) {
    const auto c = StructureConstants::from_file(data(f));
    EXPECT_FALSE(oracle::jacobi_scan(c).found) << f;
    EXPECT_NO_THROW(validate(c)) << f;
  }
  const auto bad = StructureConstants::from_file(data("bad.json"));
  const auto q = oracle::jacobi_scan(bad);
  ASSERT_TRUE(q.found);
  try {
    validate(bad);
    FAIL() << "bad.json accepted";
  } catch (const JacobiViolation& v) {
    EXPECT_EQ(std::vector<int>({v.i(), v.j(), v.k(), v.l()}), std::vector<int>({q.i, q.j, q.k, q.l}));
  }
}

TEST(Validate, CatalogAlgebrasSatisfyJacobi) {
  for (const auto& name : catalog_names())
    for (const auto& p : random_parameter_draws(name, 3, 11)) {
      const AlgebraEntry e = catalog_lookup(name, p);
      EXPECT_FALSE(oracle::jacobi_scan(e.constants).found) << entry_label(e);
    }
}

TEST(ExpMatrix, MatchesTaylorSeries) {
  const Symbol t = Symbol::coordinate("t");
  for (const auto& name : catalog_names()) {
    const AlgebraEntry e = catalog_lookup(name, name == "g3_5" ? std::map<std::string, Rational>{{"p", 1}}
                                                               : std::map<std::string, Rational>{});
    for (int k = 1; k <= e.constants.dim(); ++k) {
      const auto m = e.constants.ad(k);
      const auto closed = exp_matrix(m, Expr(t));
      const auto series = oracle::exp_series(m, 0.37);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
          EXPECT_NEAR(eval_numeric(closed[i][j], {{t, 0.37}}), series[i][j], 1e-12)
              << entry_label(e) << " ad e" << k << " [" << i << "][" << j << "]";
    }
  }
}

TEST(ExpMatrix, UnsupportedSpectrum) {
  // Eigenvalues +-sqrt(2).
  const std::vector<std::vector<Rational>> m{{0, 2}, {1, 0}};
  EXPECT_THROW(exp_matrix(m, Expr(Symbol::coordinate("t"))), EigenvalueUnsupported);
}

TEST(Catalog, RealizationsCommuteAndClose) {
  for (const auto& name : catalog_names())
    for (const auto& p : random_parameter_draws(name, 3, 5)) {
      const AlgebraEntry e = catalog_lookup(name, p);
      EXPECT_TRUE(verify_realization(e.free.xi, e.free.eta, e.constants).pass) << entry_label(e);
      if (!e.transitive.xi.empty())
        EXPECT_TRUE(verify_realization(e.transitive.xi, e.transitive.eta, e.constants).pass) << entry_label(e);
    }
}

TEST(Catalog, BuiltFromStructureConstants) {
  for (const auto& name : catalog_names()) {
    const AlgebraEntry e = catalog_lookup(name);
    const InvariantFields f = build_invariant_fields(e.constants);
    EXPECT_TRUE(verify_realization(f.xi, f.eta, e.constants).pass) << name;
  }
}

TEST(Catalog, RejectsInadmissibleParameters) {
  EXPECT_THROW(catalog_lookup("g3_4", {{"h", 1}}), CatalogError);
  EXPECT_THROW(catalog_lookup("g3_4", {{"h", 0}}), CatalogError);
  EXPECT_THROW(catalog_lookup("g3_5", {{"p", -1}}), CatalogError);
  EXPECT_THROW(catalog_lookup("g9"), CatalogError);
}

TEST(Catalog, So3FieldsAreRightAndLeftInvariant) {
  const auto c = StructureConstants::from_file(data("so3.json"));
  const InvariantFields f = build_invariant_fields(c);
  // [xi_1, xi_2] = xi_3 and [eta_1, eta_2] = -eta_3.
  const VectorField a = commutator(f.xi[0], f.xi[1]) - f.xi[2];
  const VectorField b = commutator(f.eta[0], f.eta[1]) + f.eta[2];
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(is_zero(a[i]));
    EXPECT_TRUE(is_zero(b[i]));
  }
}
