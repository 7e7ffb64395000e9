#include "cliffhopf/braiding.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cliffhopf;

namespace {

Matrix single(const Scalar& v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

CliffordStructure complex(const Scalar& i2, const Scalar& j2) { return CliffordStructure(1, single(i2), single(j2)); }

/// Samples (i², j²) with i² j² ∉ {1}.
std::pair<Scalar, Scalar> generic_pair(oracle::Sampler& sample) {
  for (;;) {
    Scalar i2 = sample.scalar(), j2 = sample.scalar();
    if (i2 * j2 != 1) return {i2, j2};
  }
}

} // namespace

TEST_SUITE("braiding") {

TEST_CASE("closed form matches the displayed formulas") {
  oracle::Sampler sample(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [i2, j2] = generic_pair(sample);
    CHECK(closed_form_sigma(i2, j2).matrix == oracle::displayed_sigma(i2, j2));
  }
  CHECK_THROWS_AS(closed_form_sigma(1, 1), ContractViolation);
}

TEST_CASE("n = 1 solution set is the closed form when a ≠ 1") {
  oracle::Sampler sample(52);
  for (int trial = 0; trial < 8; ++trial) {
    const auto [i2, j2] = generic_pair(sample);
    CAPTURE(to_string(i2));
    CAPTURE(to_string(j2));
    const auto s = complex(i2, j2);
    const auto sol = solve_sigma(s);
    REQUIRE(sol.unique());
    CHECK(*sol.particular == oracle::displayed_sigma(i2, j2));
    CHECK(is_compatible(Scattering{*sol.particular}, s));
  }
}

TEST_CASE("a = 1 solution space has dimension twelve") {
  for (const auto& [i2, j2] : std::vector<std::pair<Scalar, Scalar>>{{1, 1}, {-1, -1}, {2, Scalar(1, 2)}}) {
    const auto s = complex(i2, j2);
    const auto sol = solve_sigma(s);
    REQUIRE(sol.consistent());
    CHECK(sol.dimension() == 12);
    CHECK(is_compatible(Scattering{*sol.particular}, s));
    for (const auto& k : sol.nullspace_basis) CHECK(is_compatible(Scattering{*sol.particular + k}, s));
    CHECK(is_compatible(twelve_param_family_member(1, 2, -3, i2), s));
    CHECK(is_compatible(twelve_param_family_member(0, 0, 0, i2), s));
  }
  CHECK_THROWS_AS(twelve_param_family_member(1, 1, 1, 1), ContractViolation);
}

TEST_CASE("perturbing a compatible σ off the solution set breaks compatibility") {
  const auto s = complex(-1, Scalar(1, 3));
  Matrix perturbed = oracle::displayed_sigma(-1, Scalar(1, 3));
  perturbed(1, 2) += 1;
  CHECK_FALSE(is_compatible(Scattering{perturbed}, s));
  const auto defects = compatibility_defect(Scattering{perturbed}, s);
  CHECK(defects.size() == 4);
}

TEST_CASE("minimal polynomial identity") {
  oracle::Sampler sample(53);
  for (int trial = 0; trial < 15; ++trial) {
    const auto [i2, j2] = generic_pair(sample);
    const Scalar a = i2 * j2;
    const auto sigma = closed_form_sigma(i2, j2);
    CHECK(check_min_polynomial(sigma, a));
    CHECK(evaluate_polynomial(minimal_polynomial(sigma.matrix), sigma.matrix).is_zero());
    CHECK(minimal_polynomial(sigma.matrix).size() - 1 <= 4);
  }
}

TEST_CASE("σ is invertible iff a ≠ −1") {
  oracle::Sampler sample(54);
  for (int trial = 0; trial < 25; ++trial) {
    const auto [i2, j2] = generic_pair(sample);
    const auto m = oracle::displayed_sigma(i2, j2);
    CHECK((oracle::determinant(m) != 0) == (i2 * j2 != -1));
    CHECK(is_invertible(m) == (i2 * j2 != -1));
  }
  CHECK_FALSE(is_invertible(closed_form_sigma(-1, 1).matrix));
  CHECK_FALSE(is_invertible(closed_form_sigma(2, Scalar(-1, 2)).matrix));
}

TEST_CASE("braid equation agrees with the index-arithmetic oracle") {
  oracle::Sampler sample(55);
  for (int trial = 0; trial < 12; ++trial) {
    const auto [i2, j2] = generic_pair(sample);
    const auto sigma = closed_form_sigma(i2, j2);
    CHECK(check_braid_equation(sigma).holds == oracle::braid_relation_holds(sigma.matrix, 2));
  }
  for (const auto& [i2, j2] : std::vector<std::pair<Scalar, Scalar>>{{0, 1}, {1, 0}, {0, 0}, {-3, 0}}) {
    CHECK(oracle::braid_relation_holds(oracle::displayed_sigma(i2, j2), 2));
    CHECK(check_braid_equation(closed_form_sigma(i2, j2)).holds);
  }
  CHECK(check_braid_equation(Scattering::plain_switch(2)).holds);
  CHECK(check_braid_equation(Scattering::graded_switch(2)).holds);
}

TEST_CASE("switches and exterior bi-gebra") {
  const auto z = Matrix(2, 2);
  const CliffordStructure dkp(2, z, z);
  CHECK(is_compatible(Scattering::graded_switch(2), dkp));
  CHECK_FALSE(is_compatible(Scattering::plain_switch(2), dkp));
  const auto sw = Scattering::plain_switch(1);
  Tensor2 t(1);
  t.add_term(Blade::unit(), Blade::vector(0), 3);
  Tensor2 expect(1);
  expect.add_term(Blade::vector(0), Blade::unit(), 3);
  CHECK(sw.apply(t) == expect);
}

TEST_CASE("braided report is consistent with its flags") {
  oracle::Sampler sample(56);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [i2, j2] = generic_pair(sample);
    const auto r = check_braided(complex(i2, j2), closed_form_sigma(i2, j2));
    CHECK(r.invertible == (i2 * j2 != -1));
    CHECK(r.braid_equation_holds == oracle::braid_relation_holds(oracle::displayed_sigma(i2, j2), 2));
    CHECK(r.all_four_flags ==
          (r.invertible && r.braid_equation_holds && r.product_naturality_holds && r.coproduct_naturality_holds));
    CHECK(r.verdict_braided ==
          (r.invertible && r.braid_equation_holds && (r.product_naturality_holds || r.coproduct_naturality_holds)));
  }
  CHECK_THROWS_AS(check_braided(complex(-1, 1), Scattering::identity(1)), ContractViolation);
}

TEST_CASE("module action of the unit is the identity") {
  const Scalar i2(-2, 3);
  const auto s = complex(i2, 0);
  const auto sigma = closed_form_sigma(i2, 0);
  Tensor2 t(1);
  t.add_term(Blade::vector(0), Blade::unit(), 2);
  t.add_term(Blade::unit(), Blade::vector(0), -1);
  CHECK(module_action(unit(1, 1), t, sigma, s) == t);
}

} // TEST_SUITE
