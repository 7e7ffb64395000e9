// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any gating criterion fails; criterion 13 is recorded only.

#include "cliffhopf/report.hpp"
#include "cliffhopf/tensor_shuffle.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace cliffhopf;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

Matrix single(const Scalar& v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

Matrix zero(int n) { return Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n)); }

/// (i², j²) with i² j² ≠ 1.
std::pair<Scalar, Scalar> generic_pair(oracle::Sampler& sample) {
  for (;;) {
    Scalar i2 = sample.scalar(), j2 = sample.scalar();
    if (i2 * j2 != 1) return {i2, j2};
  }
}

Result antipode_closed_form() {
  oracle::Sampler sample(101);
  int ok = 0;
  for (int t = 0; t < 20; ++t) {
    const auto [i2, j2] = generic_pair(sample);
    const Scalar a = i2 * j2;
    const auto sol = solve_antipode(CliffordStructure(1, single(i2), single(j2)));
    Matrix expected(2, 2);
    expected(0, 0) = 1 / (1 - a);
    expected(1, 1) = -1 / (1 - a);
    if (sol.unique() && *sol.particular == expected) ++ok;
  }
  return {ok == 20, std::to_string(ok) + "/20 unique and exact"};
}

Result antipode_nonexistence() {
  const bool a = !solve_antipode(CliffordStructure(1, single(1), single(1))).consistent();
  const bool b = !solve_antipode(CliffordStructure(1, single(-2), single(Scalar(-1, 2)))).consistent();
  return {a && b, "(1,1) inconsistent: " + std::string(a ? "yes" : "no") + ", (-2,-1/2) inconsistent: " +
                      (b ? "yes" : "no")};
}

Result xi_zero_antipode_grade_two() {
  oracle::Sampler sample(103);
  int exists = 0, zero_on_grade_two = 0, total = 0;
  std::string example;
  for (int n = 2; n <= 3; ++n)
    for (int t = 0; t < 10; ++t, ++total) {
      const CliffordStructure s(n, sample.form(n), zero(n));
      const auto sol = solve_antipode(s);
      if (!sol.consistent()) continue;
      ++exists;
      const EndoMap antipode{*sol.particular};
      bool vanishes = true;
      for (Blade b : all_blades(n)) {
        if (b.grade() != 2) continue;
        const auto image = antipode.apply(Multivector(n, b));
        if (!image.is_zero()) {
          vanishes = false;
          if (example.empty()) example = "S(e" + blade_key(b) + ") = " + to_string(image);
        }
      }
      if (vanishes) ++zero_on_grade_two;
    }
  return {exists == total && zero_on_grade_two == total,
          "exists " + std::to_string(exists) + "/" + std::to_string(total) + ", zero on grade 2 " +
              std::to_string(zero_on_grade_two) + "/" + std::to_string(total) +
              (example.empty() ? "" : "; e.g. " + example)};
}

Result sigma_closed_form() {
  oracle::Sampler sample(104);
  int ok = 0;
  for (int t = 0; t < 10; ++t) {
    const auto [i2, j2] = generic_pair(sample);
    const auto sol = solve_sigma(CliffordStructure(1, single(i2), single(j2)));
    if (sol.unique() && *sol.particular == oracle::displayed_sigma(i2, j2)) ++ok;
  }
  return {ok == 10, std::to_string(ok) + "/10 unique and equal to the closed form"};
}

Result twelve_parameter_family() {
  const Scalar i2 = 2, j2 = Scalar(1, 2);
  const CliffordStructure s(1, single(i2), single(j2));
  const auto sol = solve_sigma(s);
  const bool dim12 = sol.consistent() && sol.dimension() == 12;
  int members = 0, in_space = 0;
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{0, 0}, {1, -1}, {2, 3}, {-1, -1}, {5, -2}}) {
    ++members;
    if (is_compatible(twelve_param_family_member(p, q, -p - q, i2), s)) ++in_space;
  }
  return {dim12 && in_space == members, "dimension " + std::to_string(sol.dimension()) + ", family members " +
                                            std::to_string(in_space) + "/" + std::to_string(members)};
}

Result minimum_polynomial() {
  oracle::Sampler sample(106);
  int annihilated = 0;
  for (int t = 0; t < 10; ++t) {
    const auto [i2, j2] = generic_pair(sample);
    if (check_min_polynomial(Scattering{oracle::displayed_sigma(i2, j2)}, i2 * j2)) ++annihilated;
  }
  int agree = 0;
  for (const Scalar& a : {Scalar(-1), Scalar(-1, 2), Scalar(0), Scalar(1, 2), Scalar(2)}) {
    const bool invertible = is_invertible(oracle::displayed_sigma(a, 1));
    if (invertible == (a != 1 && a != -1)) ++agree;
  }
  return {annihilated == 10 && agree == 5,
          "quartic annihilates " + std::to_string(annihilated) + "/10, invertibility agrees " + std::to_string(agree) + "/5"};
}

Result braid_at_a_zero() {
  int ok = 0, total = 0;
  for (const auto& [i2, j2] : std::vector<std::pair<Scalar, Scalar>>{{0, 1}, {1, 0}, {0, 0}, {-3, 0}, {0, Scalar(2, 5)}}) {
    ++total;
    const Matrix sigma = oracle::displayed_sigma(i2, j2);
    if (oracle::braid_relation_holds(sigma, 2) && check_braid_equation(Scattering{sigma}).holds) ++ok;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " instances satisfy the braid equation"};
}

Result braided_evidence() {
  oracle::Sampler sample(108);
  int degenerate = 0, degenerate_true = 0, strict_true = 0;
  for (int n = 1; n <= 2; ++n)
    for (int t = 0; t < 6; ++t) {
      const bool eta_zero = t % 2 == 0;
      const Matrix eta = eta_zero ? zero(n) : sample.form(n);
      const Matrix xi = eta_zero ? sample.form(n) : zero(n);
      const CliffordStructure s(n, eta, xi);
      const auto sol = solve_sigma(s);
      ++degenerate;
      if (!sol.consistent()) continue;
      const auto r = check_braided(s, Scattering{*sol.particular});
      if (r.verdict_braided) ++degenerate_true;
      if (r.all_four_flags) ++strict_true;
    }
  int generic = 0, generic_false = 0;
  while (generic < 10) {
    const Scalar i2 = sample.nonzero_scalar(), j2 = sample.nonzero_scalar();
    if (i2 * j2 == 1) continue;
    ++generic;
    const CliffordStructure s(1, single(i2), single(j2));
    if (!check_braided(s, closed_form_sigma(i2, j2)).verdict_braided) ++generic_false;
  }
  std::ostringstream d;
  d << "eta=0 or xi=0: verdict true " << degenerate_true << "/" << degenerate << " (strict four-flag reading "
    << strict_true << "/" << degenerate << ", recorded); both nonzero: verdict false " << generic_false
    << "/10 (recorded)";
  return {degenerate_true == degenerate, d.str()};
}

Result duality_and_coproduct() {
  oracle::Sampler sample(109);
  int duality = 0;
  for (int t = 0; t < 10; ++t) {
    const int n = 1 + t % 3;
    if (!find_duality_failure(CliffordStructure(n, sample.form(n), sample.form(n)))) ++duality;
  }
  int dkp = 0, blades = 0;
  for (int n = 0; n <= 4; ++n) {
    const CliffordStructure s(n, zero(n), zero(n));
    for (Blade b : all_blades(n)) {
      ++blades;
      if (s.blade_coproduct(b) == oracle::unshuffle(n, b) && dkp_coproduct(Multivector(n, b)) == oracle::unshuffle(n, b))
        ++dkp;
    }
  }
  bool sign_pattern = true;
  for (int n = 1; n <= 3; ++n) {
    const Matrix xi = sample.nonzero_form(n);
    const CliffordStructure s(n, zero(n), xi);
    const Tensor2& t = s.blade_coproduct(Blade::unit());
    for (Blade a : all_blades(n))
      for (Blade b : all_blades(n)) {
        Scalar expected = 0;
        if (a.grade() == b.grade())
          expected = ((a.grade() / 2) % 2 == 0 ? 1 : -1) * oracle::determinant(oracle::gram(xi, a, b));
        sign_pattern = sign_pattern && t.coefficient(a, b) == expected;
      }
  }
  std::ostringstream d;
  d << "duality " << duality << "/10, DKP " << dkp << "/" << blades << " blades, unit series sign pattern "
    << (sign_pattern ? "ok" : "broken");
  return {duality == 10 && dkp == blades && sign_pattern, d.str()};
}

Result bigebra_laws() {
  oracle::Sampler sample(110);
  int laws = 0, law_total = 0;
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 3; ++t, ++law_total) {
      const CliffordStructure s(n, sample.form(n), sample.form(n));
      if (!s.algebra().find_associativity_failure() && !s.dual_algebra().find_associativity_failure() &&
          !find_coassociativity_failure(s) && !find_counit_law_failure(s))
        ++laws;
    }
  int iff = 0;
  for (int t = 0; t < 10; ++t) {
    const int n = 1 + t % 2;
    const Matrix form = sample.nonzero_form(n);
    const bool counit_ok = !check_counit_is_algebra_map(CliffordStructure(n, form, sample.form(n))).holds &&
                           check_counit_is_algebra_map(CliffordStructure(n, zero(n), sample.form(n))).holds;
    const bool unit_ok = !check_unit_is_cogebra_map(CliffordStructure(n, sample.form(n), form)).holds &&
                         check_unit_is_cogebra_map(CliffordStructure(n, sample.form(n), zero(n))).holds;
    if (counit_ok && unit_ok) ++iff;
  }
  return {laws == law_total && iff == 10, "laws " + std::to_string(laws) + "/" + std::to_string(law_total) +
                                              ", unit/counit iff " + std::to_string(iff) + "/10"};
}

Result shuffle_duality_and_lifts() {
  oracle::Sampler sample(111);
  bool ok = true;
  std::string failed;
  auto note = [&](bool v, const char* what) {
    if (!v) failed += std::string(failed.empty() ? "" : ", ") + what;
    ok = ok && v;
  };
  bool crossed = false;
  for (int n = 1; n <= 2; ++n) {
    note(check_pairing_duality(n, 4, WordProduct::concat, WordCoproduct::deconcat), "concat/deconcat");
    note(check_pairing_duality(n, 4, WordProduct::shuffle, WordCoproduct::unshuffle), "shuffle/unshuffle");
    crossed = crossed || check_pairing_duality(n, 4, WordProduct::concat, WordCoproduct::unshuffle) ||
              check_pairing_duality(n, 4, WordProduct::shuffle, WordCoproduct::deconcat);
    const CliffordStructure s(n, sample.form(n), sample.form(n));
    std::vector<Multivector> images;
    for (int mu = 0; mu < n; ++mu) images.push_back(Multivector::basis_vector(n, mu));
    note(check_universal_lift_multiplicative(universal_lift(images, s), n, 4), "universal lift");
    note(check_couniversal_lift_comultiplicative(couniversal_lift(grade_one_projection(n), s, 4), s), "couniversal lift");
  }
  return {ok, (ok ? std::string("all exhaustive checks hold") : "failed: " + failed) +
                  "; crossed pairings concat/unshuffle, shuffle/deconcat " + (crossed ? "hold" : "fail") + " (recorded)"};
}

Result symmetrizer_ranks() {
  const auto start = std::chrono::steady_clock::now();
  int ok = 0, total = 0;
  for (int n = 1; n <= 4; ++n) {
    Matrix negative = letter_switch(n);
    negative *= -1;
    const auto ranks = exterior_image_dimensions(negative, n, 4);
    for (int k = 0; k <= 4; ++k, ++total)
      if (ranks[static_cast<std::size_t>(k)] == oracle::binomial(n, k)) ++ok;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.2f s", seconds);
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " ranks equal C(n,k)" + buf};
}

Result conjecture_evidence() {
  oracle::Sampler sample(113);
  report::SweepRequest req;
  for (int t = 0; t < 10; ++t) req.pairs.push_back(generic_pair(sample));
  req.random_samples = 50;
  req.seed = 13;
  req.jobs = 1;
  const auto first = report::sweep(req);
  req.jobs = 4;
  const auto second = report::sweep(req);
  const bool deterministic = report::dump(first) == report::dump(second);
  const auto& agg = first["aggregate"];
  std::ostringstream d;
  d << "conjecture consistent " << agg["conjecture"]["consistent"] << "/" << agg["conjecture"]["instances"]
    << ", braid equation holds " << agg["braid_equation"]["holds"] << "/" << agg["braid_equation"]["samples"]
    << ", reruns " << (deterministic ? "identical" : "differ") << " (recorded)";
  return {deterministic, d.str()};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"antipode closed form", antipode_closed_form},
      {"antipode nonexistence at a = 1", antipode_nonexistence},
      {"xi = 0 antipode vanishes on grade 2", xi_zero_antipode_grade_two},
      {"sigma uniqueness and closed form", sigma_closed_form},
      {"twelve-parameter family", twelve_parameter_family},
      {"minimum polynomial and invertibility", minimum_polynomial},
      {"braid equation at a = 0", braid_at_a_zero},
      {"braided evidence", braided_evidence},
      {"duality and co-product", duality_and_coproduct},
      {"bi-gebra laws", bigebra_laws},
      {"shuffle duality and lifts", shuffle_duality_and_lifts},
      {"symmetrizer ranks", symmetrizer_ranks},
      {"conjecture evidence", conjecture_evidence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const bool gating = i + 1 != 13;
    if (gating && !r.pass) ++failures;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << r.detail
              << "]" << (gating ? "" : " (not gating)") << "\n";
  }
  return failures == 0 ? 0 : 1;
}
