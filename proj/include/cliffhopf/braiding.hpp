#pragma once

#include "cliffhopf/hopf.hpp"

#include <vector>

namespace cliffhopf {

/// Scattering σ ∈ End(M^∧ ⊗ M^∧), 4^n × 4^n over the blade-pair basis
/// (index a * 2^n + b); column k is σ of basis pair k.
struct Scattering {
  Matrix matrix;

  static Scattering identity(int dim);
  /// Plain transposition e_a ⊗ e_b ↦ e_b ⊗ e_a.
  static Scattering plain_switch(int dim);
  /// e_a ⊗ e_b ↦ (−1)^{|a||b|} e_b ⊗ e_a
  static Scattering graded_switch(int dim);

  Tensor2 apply(const Tensor2& t) const;
  friend bool operator==(const Scattering&, const Scattering&) = default;
};

/// Defect of the bi-gebra law for every input blade pair, indexed a * 2^n + b:
/// △(x y) − (∧ ⊗ ∧)(id ⊗ σ ⊗ id)(△x ⊗ △y).
std::vector<Tensor2> compatibility_defect(const Scattering& sigma, const CliffordStructure& s);
bool is_compatible(const Scattering& sigma, const CliffordStructure& s);

/// Exact solution set of the bi-gebra law, linear in the 16^n entries of σ.
OperatorSolutionSet solve_sigma(const CliffordStructure& s);

/// n = 1 closed form in (i², j²), a = i² j² ≠ 1.
Scattering closed_form_sigma(const Scalar& i2, const Scalar& j2);

/// (σ + id)(σ − b id)(σ² + a b σ − b id) = 0 with b = (1 + a)/(1 − a).
bool check_min_polynomial(const Scattering& sigma, const Scalar& a);

struct BraidCheck {
  bool holds = false;
  std::size_t defect_nonzeros = 0;
};

/// (σ⊗id)(id⊗σ)(σ⊗id) = (id⊗σ)(σ⊗id)(id⊗σ) on the triple tensor power.
BraidCheck check_braid_equation(const Scattering& sigma);

/// Braid equation for a σ acting on X ⊗ X with dim X = factor.
BraidCheck check_braid_equation(const Matrix& sigma, std::size_t factor);

struct BraidedReport {
  bool invertible = false;
  bool braid_equation_holds = false;
  /// σ ∘ (∧ ⊗ id) = (id ⊗ ∧) ∘ (σ ⊗ id) ∘ (id ⊗ σ)
  bool product_naturality_holds = false;
  /// (△ ⊗ id) ∘ σ = (id ⊗ σ) ∘ (σ ⊗ id) ∘ (id ⊗ △)
  bool coproduct_naturality_holds = false;
  /// Conjunction of all four flags.
  bool all_four_flags = false;
  /// invertible ∧ braid ∧ (product naturality ∨ co-product naturality)
  bool verdict_braided = false;
};

/// Throws ContractViolation if σ does not satisfy the bi-gebra law.
BraidedReport check_braided(const CliffordStructure& s, const Scattering& sigma);

/// n = 1, i² j² = 1 family; requires p + q + r = 0.
Scattering twelve_param_family_member(const Scalar& p, const Scalar& q, const Scalar& r, const Scalar& i2);

/// (∧ ⊗ ∧)(id ⊗ σ ⊗ id)(△x ⊗ t)
Tensor2 module_action(const Multivector& x, const Tensor2& t, const Scattering& sigma, const CliffordStructure& s);

struct ActionAssociativityEntry {
  Blade x, y, left, right;
  bool equal = false;
};

/// act(x ∧^η y, t) versus act(x, act(y, t)) over all blade triples (x, y, e_l ⊗ e_r).
std::vector<ActionAssociativityEntry> action_associativity_table(const Scattering& sigma, const CliffordStructure& s);

} // namespace cliffhopf
