#pragma once

// Independent reference computations used as test oracles. Nothing here calls
// the library's tabulated kernels.

#include "cliffhopf/clifford.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cliffhopf::Blade;
using cliffhopf::Matrix;
using cliffhopf::Scalar;

/// Sign of the permutation that sorts `seq` (distinct entries), by counting inversions.
inline int permutation_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/// Leibniz expansion.
inline Scalar determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    Scalar term = permutation_sign(perm);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, static_cast<std::size_t>(perm[i]));
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<int> indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((b.bits >> i) & 1U) out.push_back(i);
  return out;
}

/// e_T ∧ e_U = sign · e_{T ∪ U} for disjoint T, U.
inline int concatenation_sign(Blade t, Blade u) {
  auto seq = indices(t);
  auto tail = indices(u);
  seq.insert(seq.end(), tail.begin(), tail.end());
  return permutation_sign(seq);
}

/// Closed-form ξ = 0 co-product from concatenation signs.
inline cliffhopf::Tensor2 unshuffle(int dim, Blade s) {
  cliffhopf::Tensor2 out(dim);
  for (std::uint32_t t = 0; t < (std::uint32_t{1} << dim); ++t) {
    if ((t & ~s.bits) != 0) continue;
    const Blade left{t}, right{s.bits & ~t};
    out.add_term(left, right, concatenation_sign(left, right));
  }
  return out;
}

/// [form(a_i, b_j)] for blades of equal grade.
inline Matrix gram(const Matrix& form, Blade a, Blade b) {
  const auto ia = indices(a), ib = indices(b);
  Matrix g(ia.size(), ib.size());
  for (std::size_t i = 0; i < ia.size(); ++i)
    for (std::size_t j = 0; j < ib.size(); ++j)
      g(i, j) = form(static_cast<std::size_t>(ia[i]), static_cast<std::size_t>(ib[j]));
  return g;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Deterministic small-rational sampler.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Scalar scalar(int range = 4) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    Scalar s(num(rng_), den(rng_));
    s.canonicalize();
    return s;
  }

  Scalar nonzero_scalar(int range = 4) {
    for (;;) {
      Scalar s = scalar(range);
      if (s != 0) return s;
    }
  }

  Matrix form(int n) {
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalar();
    return m;
  }

  Matrix nonzero_form(int n) {
    for (;;) {
      Matrix m = form(n);
      if (!m.is_zero()) return m;
    }
  }

  Matrix dense(std::size_t rows, std::size_t cols, int sparsity_percent = 0) {
    std::uniform_int_distribution<int> pct(0, 99);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (pct(rng_) >= sparsity_percent) m(r, c) = scalar();
    return m;
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
  std::mt19937_64 rng_;
};

/// n = 1 pair basis: 0 = 1⊗1, 1 = 1⊗i, 2 = i⊗1, 3 = i⊗i.
enum Pair : std::size_t { kOneOne = 0, kOneI = 1, kIOne = 2, kII = 3 };

/// Scattering written image by image from the displayed formulas, a = i²j² ≠ 1.
inline Matrix displayed_sigma(const Scalar& i2, const Scalar& j2) {
  const Scalar a = i2 * j2;
  const Scalar f = 1 / (1 - a);
  Matrix m(4, 4);
  // σ(1⊗1) = (1 − a²/(1−a)) 1⊗1 − j²/(1−a) i⊗i
  m(kOneOne, kOneOne) = 1 - a * a / (1 - a);
  m(kII, kOneOne) = -j2 / (1 - a);
  // σ(i⊗i) = −1/(1−a) (i⊗i + i² 1⊗1)
  m(kII, kII) = -f;
  m(kOneOne, kII) = -f * i2;
  // σ(1⊗i) = 1/(1−a) (i⊗1 + a 1⊗i)
  m(kIOne, kOneI) = f;
  m(kOneI, kOneI) = f * a;
  // σ(i⊗1) = 1/(1−a) (1⊗i + a i⊗1)
  m(kOneI, kIOne) = f;
  m(kIOne, kIOne) = f * a;
  return m;
}

/// (σ⊗id)(id⊗σ)(σ⊗id) − (id⊗σ)(σ⊗id)(id⊗σ) applied to every basis triple by
/// explicit index arithmetic; returns true iff zero.
inline bool braid_relation_holds(const Matrix& sigma, std::size_t d) {
  using Vec = std::vector<Scalar>;
  auto left = [&](const Vec& v) {  // σ on factors (0, 1)
    Vec out(d * d * d);
    for (std::size_t i = 0; i < d * d * d; ++i) {
      if (cliffhopf::is_zero(v[i])) continue;
      const std::size_t pair = i / d, rest = i % d;
      for (std::size_t r = 0; r < d * d; ++r) out[r * d + rest] += sigma(r, pair) * v[i];
    }
    return out;
  };
  auto right = [&](const Vec& v) {  // σ on factors (1, 2)
    Vec out(d * d * d);
    for (std::size_t i = 0; i < d * d * d; ++i) {
      if (cliffhopf::is_zero(v[i])) continue;
      const std::size_t first = i / (d * d), pair = i % (d * d);
      for (std::size_t r = 0; r < d * d; ++r) out[first * d * d + r] += sigma(r, pair) * v[i];
    }
    return out;
  };
  for (std::size_t b = 0; b < d * d * d; ++b) {
    Vec e(d * d * d);
    e[b] = 1;
    if (left(right(left(e))) != right(left(right(e)))) return false;
  }
  return true;
}

} // namespace oracle
