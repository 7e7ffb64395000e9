#pragma once

#include "cliffhopf/clifford.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace cliffhopf {

/// Letters are indices in [0, n).
using Word = std::vector<int>;

inline constexpr int kDefaultTruncation = 4;

/// Element of the word space ⊕_{k ≤ L} M^{⊗k}. Products that would exceed
/// the bound drop the long words and set `truncated`.
class GradedElement {
public:
  using Terms = std::map<Word, Scalar>;

  GradedElement() = default;
  GradedElement(int dim, int bound);
  static GradedElement word(int dim, int bound, Word w, const Scalar& c = 1);

  int dim() const { return dim_; }
  int bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }

  Scalar coefficient(const Word& w) const;
  /// Words longer than the bound are dropped and flag truncation.
  void add_term(const Word& w, const Scalar& c);

  GradedElement& operator+=(const GradedElement& other);
  GradedElement& operator-=(const GradedElement& other);
  GradedElement& operator*=(const Scalar& s);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const Scalar& s, GradedElement a) { return a *= s; }
  /// Compares terms only; the truncation flag is metadata.
  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

private:
  int dim_ = 0;
  int bound_ = kDefaultTruncation;
  Terms terms_;
  bool truncated_ = false;
};

/// Element of (word space) ⊗ (word space).
class WordTensor {
public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, Scalar>;

  WordTensor() = default;
  WordTensor(int dim, int bound);
  static WordTensor simple(const GradedElement& x, const GradedElement& y);

  int dim() const { return dim_; }
  int bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Word& a, const Word& b) const;
  void add_term(const Word& a, const Word& b, const Scalar& c);

  WordTensor& operator+=(const WordTensor& other);
  WordTensor& operator-=(const WordTensor& other);
  friend WordTensor operator-(WordTensor a, const WordTensor& b) { return a -= b; }
  friend bool operator==(const WordTensor& a, const WordTensor& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

private:
  int dim_ = 0;
  int bound_ = kDefaultTruncation;
  Terms terms_;
};

std::string to_string(const Word& w);
std::string to_string(const GradedElement& x);

GradedElement concat_product(const GradedElement& x, const GradedElement& y);
WordTensor deconcat_coproduct(const GradedElement& x);
GradedElement shuffle_product(const GradedElement& x, const GradedElement& y);
WordTensor unshuffle_coproduct(const GradedElement& x);

/// Coefficient of the empty word.
Scalar word_counit(const GradedElement& x);

/// Σ_w α_w x_w: words are dual bases of each other.
Scalar word_pairing(const GradedElement& alpha, const GradedElement& x);
Scalar word_pairing(const WordTensor& alpha, const WordTensor& x);

/// All words of length ≤ bound over n letters, shortest first, lexicographic
/// within a length.
std::vector<Word> all_words(int dim, int bound);
/// Words of exactly `length` letters in lexicographic order.
std::vector<Word> words_of_length(int dim, int length);
/// Position of w in lexicographic order among words of its length.
std::size_t word_index(const Word& w, int dim);

struct WordLawReport {
  bool concat_associative = true;
  bool shuffle_associative = true;
  bool deconcat_coassociative = true;
  bool unshuffle_coassociative = true;
  /// Empty word is a two-sided unit for both products.
  bool unital = true;
  /// Word counit is a two-sided counit for both co-products.
  bool counital = true;
  bool all() const;
};

/// Exhaustive over all words of total length ≤ bound.
WordLawReport check_word_algebra_laws(int dim, int bound);

enum class WordProduct { concat, shuffle };
enum class WordCoproduct { deconcat, unshuffle };

/// ⟨product(α, β), x⟩ = ⟨α ⊗ β, coproduct x⟩ over all words of length ≤ bound.
/// Under the word pairing this holds for (concat, deconcat) and
/// (shuffle, unshuffle) and fails for the crossed pairs.
bool check_pairing_duality(int dim, int bound, WordProduct product, WordCoproduct coproduct);

/// Algebra morphism TM → Cℓ(M, η) extending ℓ: M → Cℓ(M, η).
class UniversalLift {
public:
  /// images[μ] = ℓ(e_μ)
  UniversalLift(std::vector<Multivector> images, const CliffordStructure& target);
  Multivector operator()(const GradedElement& x) const;
  Multivector operator()(const Word& w) const;
  const CliffordStructure& target() const { return *target_; }

private:
  std::vector<Multivector> images_;
  const CliffordStructure* target_;
};

UniversalLift universal_lift(std::vector<Multivector> images, const CliffordStructure& target);

/// ℓ^A(uv) = ℓ^A(u) ℓ^A(v) for all words with |u| + |v| ≤ bound.
bool check_universal_lift_multiplicative(const UniversalLift& lift, int dim, int bound);

/// Co-gebra morphism (M^∧, △^ξ) → ShM up to truncation, extending ℓ: M^∧ → M:
/// x ↦ ε(x)·() + Σ_{k ≥ 1} ℓ^{⊗k} △^{(k−1)} x. Iterated co-products split the
/// last factor.
class CouniversalLift {
public:
  /// `ell` is n × 2^n; column b is ℓ(e_b) in the basis {e_μ}.
  CouniversalLift(Matrix ell, const CliffordStructure& source, int bound);
  GradedElement operator()(const Multivector& x) const;
  int bound() const { return bound_; }

private:
  Matrix ell_;
  const CliffordStructure* source_;
  int bound_;
};

CouniversalLift couniversal_lift(Matrix ell, const CliffordStructure& source, int bound);

/// (ℓ^C ⊗ ℓ^C)△^ξ = deconcat ∘ ℓ^C on every blade, comparing word pairs of
/// total length ≤ the lift's bound.
bool check_couniversal_lift_comultiplicative(const CouniversalLift& lift, const CliffordStructure& source);

/// n × 2^n matrix of the projection M^∧ → M onto grade 1.
Matrix grade_one_projection(int dim);

/// σ_1 … σ_{k−1} on the length-k word space (dimension n^k, lexicographic
/// order); σ_i acts on letters i, i+1 (1-based). σ is n² × n² on letter pairs
/// with index a·n + b.
std::vector<Matrix> braid_lift(const Matrix& letter_sigma, int dim, int length);

/// Σ_{π ∈ S_k} σ_π with σ_π lifted through a reduced word of π. Throws
/// ContractViolation unless σ satisfies the braid equation.
Matrix quantum_symmetrizer(const Matrix& letter_sigma, int dim, int length);

/// Reduced word of π (sequence of 1-based adjacent transposition indices),
/// obtained by bubble sort; empty for the identity.
std::vector<int> reduced_word(const std::vector<int>& permutation);

/// σ_{i_1} ⋯ σ_{i_m} for the given generator indices.
Matrix lift_word(const std::vector<Matrix>& generators, const std::vector<int>& indices, std::size_t size);

/// Compares the lifts of s1 s2 s1 and s2 s1 s2 on length-3 words.
bool reduced_words_agree(const Matrix& letter_sigma, int dim);

/// rank quantum_symmetrizer(σ, j) for j = 0 .. up_to.
std::vector<std::size_t> exterior_image_dimensions(const Matrix& letter_sigma, int dim, int up_to);

/// Image of the block x ⊗ y (as word xy) after moving y across x through
/// letter crossings; result is split as (first |y| letters) ⊗ (last |x|).
WordTensor block_crossing(const Word& x, const Word& y, const Matrix& letter_sigma, int dim, int bound);

struct ZeroBraidCheck {
  bool holds = true;
  /// Word pairs (u, v) with nonzero defect.
  std::vector<std::pair<Word, Word>> witnesses;
};

/// Bi-gebra law for concatenation and deconcatenation on all word pairs with
/// |u| + |v| ≤ bound, crossings given by block_crossing of letter_sigma
/// (zero by default).
ZeroBraidCheck zero_braid_bigebra_check(int dim, int bound);
ZeroBraidCheck zero_braid_bigebra_check(int dim, int bound, const Matrix& letter_sigma);

/// Letter-level plain switch and its negative.
Matrix letter_switch(int dim);

struct HopfHomomorphismRecord {
  /// Symmetrizer of the zero pre-braid is the identity for k ≤ L.
  bool deformation_of_identity = false;
  /// Sym_σ commutes with S_σ = (−1)^k σ_{w0} on every length k ≤ L.
  bool commutes_with_antipode = false;
  /// Convolution inverse of id for concatenation/deconcatenation equals
  /// (−1)^k 0_{w0}, i.e. vanishes from length 2 on.
  bool zero_braid_antipode_matches = false;
};

/// Recorded at n = 1: letter σ is the 1 × 1 matrix [q].
HopfHomomorphismRecord hopf_homomorphism_checks(const Scalar& q, int bound);

} // namespace cliffhopf
