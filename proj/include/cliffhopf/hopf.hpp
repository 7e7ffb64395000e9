#pragma once

#include "cliffhopf/clifford.hpp"
#include "cliffhopf/linalg.hpp"

#include <optional>
#include <vector>

namespace cliffhopf {

/// Solution set of a linear system whose unknowns are the entries of a
/// square operator matrix (row-major unknown ordering).
struct OperatorSolutionSet {
  std::optional<Matrix> particular;
  std::vector<Matrix> nullspace_basis;
  std::size_t rank = 0;

  bool consistent() const { return particular.has_value(); }
  bool unique() const { return consistent() && nullspace_basis.empty(); }
  std::size_t dimension() const { return nullspace_basis.size(); }

  static OperatorSolutionSet from_flat(const AffineSolutionSet& flat, std::size_t size);
};

/// Endomorphism of M^∧ as a 2^n × 2^n matrix; column b is the image of blade b.
struct EndoMap {
  Matrix matrix;

  static EndoMap identity(const CliffordStructure& s);
  /// u ∘ ε
  static EndoMap unit_counit(const CliffordStructure& s);

  Multivector apply(const Multivector& x) const;
  friend bool operator==(const EndoMap&, const EndoMap&) = default;
};

/// (f ⋆ g) = ∧^η ∘ (f ⊗ g) ∘ △^ξ
EndoMap convolution(const EndoMap& f, const EndoMap& g, const CliffordStructure& s);

/// Two-sided antipode axiom S ⋆ id = u∘ε = id ⋆ S, solved for the 4^n entries of S.
OperatorSolutionSet solve_antipode(const CliffordStructure& s);

/// n = 1 closed form S1 = 1/(1−a), Si = −i/(1−a). Throws ContractViolation at a = 1.
EndoMap complex_antipode_closed_form(const Scalar& a);

/// Matrix of ξ∘η ∈ End(M) in the basis {e_μ}.
Matrix xi_after_eta(const CliffordStructure& s);

struct ConjectureEvidence {
  bool xi_eta_is_identity = false;
  bool antipode_exists = false;
  /// antipode_exists == !xi_eta_is_identity
  bool conjecture_consistent = false;
};

ConjectureEvidence test_conjecture_antipode(const CliffordStructure& s);

} // namespace cliffhopf
