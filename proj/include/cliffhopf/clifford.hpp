#pragma once

#include "cliffhopf/exterior.hpp"
#include "cliffhopf/matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cliffhopf {

/// Element of M^∧ ⊗ M^∧ keyed by blade pairs.
class Tensor2 {
public:
  using Key = std::pair<Blade, Blade>;
  using Terms = std::map<Key, Scalar>;

  Tensor2() = default;
  explicit Tensor2(int dim);
  static Tensor2 simple(const Multivector& x, const Multivector& y);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(Blade a, Blade b) const;
  void add_term(Blade a, Blade b, const Scalar& c);

  Tensor2& operator+=(const Tensor2& other);
  Tensor2& operator-=(const Tensor2& other);
  Tensor2& operator*=(const Scalar& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Scalar& s, Tensor2 a) { return a *= s; }
  friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

private:
  int dim_ = 0;
  Terms terms_;
};

std::string to_string(const Tensor2& t);

/// Clifford algebra on the exterior algebra of Space, deformed by a bilinear
/// form (symmetry not required). Vector products follow Chevalley:
/// e_μ x = e_μ ∧ x + i_{form(e_μ, ·)} x. Blade structure constants are tabulated
/// at construction.
template <class Space>
class CliffordAlgebra {
public:
  using Element = BasicMultivector<Space>;

  CliffordAlgebra() = default;
  CliffordAlgebra(int dim, Matrix form);

  int dim() const { return dim_; }
  const Matrix& form() const { return form_; }

  const Element& blade_product(Blade a, Blade b) const;
  Element multiply(const Element& x, const Element& y) const;
  Element vector_product(int index, const Element& x) const;

  /// Exhaustive check of (ab)c = a(bc) over blade triples; first failing
  /// triple is returned.
  std::optional<std::array<Blade, 3>> find_associativity_failure() const;

private:
  int dim_ = 0;
  Matrix form_;
  std::vector<Element> table_; // index a.bits * 2^n + b.bits
};

extern template class CliffordAlgebra<VectorSpace>;
extern template class CliffordAlgebra<CovectorSpace>;

namespace reference {
/// Product computed without tables by direct Chevalley recursion; used to
/// cross-check the tabulated (parallel) construction.
template <class Space>
BasicMultivector<Space> chevalley_product(const Matrix& form, const BasicMultivector<Space>& x,
                                          const BasicMultivector<Space>& y);
} // namespace reference

/// The pair Cℓ(M, η) and Cℓ(M*, ξ) with the co-product △^ξ on M^∧ obtained
/// by transposing ∧^ξ through the determinant pairing, with
/// ⟨α ⊗ β, x ⊗ y⟩ = ⟨α, x⟩⟨β, y⟩. Immutable after construction.
class CliffordStructure {
public:
  CliffordStructure(int dim, Matrix eta, Matrix xi);

  int dim() const { return dim_; }
  std::size_t blade_count() const { return std::size_t{1} << dim_; }
  const Matrix& eta() const { return algebra_.form(); }
  const Matrix& xi() const { return dual_algebra_.form(); }

  const CliffordAlgebra<VectorSpace>& algebra() const { return algebra_; }
  const CliffordAlgebra<CovectorSpace>& dual_algebra() const { return dual_algebra_; }

  Multivector product(const Multivector& x, const Multivector& y) const { return algebra_.multiply(x, y); }
  DualMultivector dual_product(const DualMultivector& a, const DualMultivector& b) const {
    return dual_algebra_.multiply(a, b);
  }

  const Tensor2& blade_coproduct(Blade b) const { return coproduct_table_[b.bits]; }
  Tensor2 coproduct(const Multivector& x) const;

  /// Whether construction ran the exhaustive associativity check (n <= 3).
  bool associativity_verified() const { return associativity_verified_; }

private:
  int dim_;
  CliffordAlgebra<VectorSpace> algebra_;
  CliffordAlgebra<CovectorSpace> dual_algebra_;
  std::vector<Tensor2> coproduct_table_;
  bool associativity_verified_ = false;
};

/// Upper bound on n for the construction-time associativity check.
inline constexpr int kEagerAssociativityRank = 3;

Multivector clifford_product(const Multivector& x, const Multivector& y, const CliffordStructure& s);
DualMultivector dual_clifford_product(const DualMultivector& a, const DualMultivector& b, const CliffordStructure& s);
Tensor2 coproduct(const Multivector& x, const CliffordStructure& s);

/// Coefficient of the empty blade.
Scalar counit(const Multivector& x);
Multivector unit(int dim, const Scalar& c);

/// Closed-form ξ = 0 co-product: unshuffle of each blade with exterior signs,
/// e_S ↦ Σ_{T ⊆ S} sign(T, S∖T) e_T ⊗ e_{S∖T}, where e_T ∧ e_{S∖T} = sign · e_S.
Tensor2 dkp_coproduct(const Multivector& x);

struct MorphismCheck {
  bool holds = true;
  /// Failing blade pair for the counit check; the unit check reports the
  /// defect △1 − 1⊗1 instead.
  std::optional<std::pair<Blade, Blade>> witness;
  Tensor2 defect;
};

/// ε(x ∧^η y) = ε(x) ε(y) on all blade pairs.
MorphismCheck check_counit_is_algebra_map(const CliffordStructure& s);
/// △^ξ 1 = 1 ⊗ 1.
MorphismCheck check_unit_is_cogebra_map(const CliffordStructure& s);

/// (△ ⊗ id)△ = (id ⊗ △)△; returns the first failing blade.
std::optional<Blade> find_coassociativity_failure(const CliffordStructure& s);
/// (ε ⊗ id)△ = id = (id ⊗ ε)△; returns the first failing blade.
std::optional<Blade> find_counit_law_failure(const CliffordStructure& s);
/// ⟨α ∧^ξ β, x⟩ = ⟨α ⊗ β, △x⟩ over dual blades α, β and blades x, with α ∧^ξ β
/// taken from the table-free recursion. Returns the first failing (α, β, x).
std::optional<std::array<Blade, 3>> find_duality_failure(const CliffordStructure& s);

/// Dense matrices over the blade basis (index = bits) and blade-pair basis
/// (index = a * 2^n + b).
Matrix product_matrix(const CliffordStructure& s);   // 2^n × 4^n
Matrix coproduct_matrix(const CliffordStructure& s); // 4^n × 2^n
Matrix counit_matrix(const CliffordStructure& s);    // 1 × 2^n
Matrix unit_matrix(const CliffordStructure& s);      // 2^n × 1

Vector to_vector(const Multivector& x);
Multivector from_vector(int dim, const Vector& v);
Vector to_vector(const Tensor2& t);
Tensor2 tensor_from_vector(int dim, const Vector& v);

} // namespace cliffhopf
