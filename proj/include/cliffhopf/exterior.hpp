#pragma once

#include "cliffhopf/scalar.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cliffhopf {

/// Largest supported module rank; blades are bitmasks in a 32-bit word.
inline constexpr int kMaxRank = 16;

/// Canonically oriented basis blade e_S = e_{s1} ∧ ... ∧ e_{sk}, s1 < ... < sk.
struct Blade {
  std::uint32_t bits = 0;

  static constexpr Blade unit() { return {0}; }
  static constexpr Blade vector(int index) { return {std::uint32_t{1} << index}; }

  int grade() const { return std::popcount(bits); }
  bool contains(int index) const { return (bits >> index) & 1U; }
  /// Ascending list of indices.
  std::vector<int> indices() const;

  friend auto operator<=>(const Blade&, const Blade&) = default;
};

/// Number of inversions (s, t), s in lhs, t in rhs, s > t; the sign of
/// e_lhs ∧ e_rhs relative to e_{lhs ∪ rhs} is (-1)^count.
int wedge_inversions(Blade lhs, Blade rhs);

/// "" for the unit, "0,2" for e0∧e2.
std::string blade_key(Blade b);
Blade parse_blade_key(const std::string& key, int dim);

/// Enumerates all 2^n blades in bitmask order.
std::vector<Blade> all_blades(int dim);

struct VectorSpace {};
struct CovectorSpace {};

/// Grade-sparse element of the exterior algebra over a rank-`dim` free module.
/// Space tags the module (M or M*), so vectors and co-vectors never mix.
template <class Space>
class BasicMultivector {
public:
  using Terms = std::map<Blade, Scalar>;

  BasicMultivector() = default;
  explicit BasicMultivector(int dim);
  BasicMultivector(int dim, Blade b, Scalar coefficient = 1);

  static BasicMultivector scalar(int dim, const Scalar& c) { return BasicMultivector(dim, Blade::unit(), c); }
  static BasicMultivector basis_vector(int dim, int index) { return BasicMultivector(dim, Blade::vector(index)); }

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(Blade b) const;
  void add_term(Blade b, const Scalar& c);

  /// Highest grade present; -1 for zero.
  int max_grade() const;
  bool is_homogeneous(int grade) const;

  BasicMultivector& operator+=(const BasicMultivector& other);
  BasicMultivector& operator-=(const BasicMultivector& other);
  BasicMultivector& operator*=(const Scalar& s);

  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator*(const Scalar& s, BasicMultivector a) { return a *= s; }
  friend BasicMultivector operator-(BasicMultivector a) { return a *= Scalar(-1); }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

private:
  int dim_ = 0;
  Terms terms_;
};

using Multivector = BasicMultivector<VectorSpace>;
using DualMultivector = BasicMultivector<CovectorSpace>;

/// The space paired against Space by the determinant pairing.
template <class Space> struct DualOf;
template <> struct DualOf<VectorSpace> { using type = CovectorSpace; };
template <> struct DualOf<CovectorSpace> { using type = VectorSpace; };

template <class Space>
BasicMultivector<Space> wedge(const BasicMultivector<Space>& x, const BasicMultivector<Space>& y);

/// Antiderivation i_α with i_α(e_μ) = α(e_μ). The functional is given by its
/// components on the basis of Space; `alpha` has grade 1 and lives in the dual.
template <class Space>
BasicMultivector<Space> contract(const BasicMultivector<typename DualOf<Space>::type>& alpha,
                                 const BasicMultivector<Space>& x);

/// Same antiderivation with the functional given by raw components.
template <class Space>
BasicMultivector<Space> contract_components(const std::vector<Scalar>& alpha, const BasicMultivector<Space>& x);

/// ⟨α, x⟩ = Σ_S α_S x_S; canonical blades are orthonormal under the determinant.
Scalar det_pairing(const DualMultivector& alpha, const Multivector& x);

template <class Space>
BasicMultivector<Space> grade_project(const BasicMultivector<Space>& x, int grade);

std::string to_string(const Multivector& x);
std::string to_string(const DualMultivector& x);

void require_dim(int dim);

extern template class BasicMultivector<VectorSpace>;
extern template class BasicMultivector<CovectorSpace>;

} // namespace cliffhopf
