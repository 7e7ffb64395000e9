#include "cliffhopf/linalg.hpp"

#include <utility>

namespace cliffhopf {

namespace {

constexpr std::size_t kParallelRows = 24;

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

// Subtracts factor * pivot_row from target, touching only columns >= from.
void eliminate_row(std::span<Scalar> target, std::span<const Scalar> pivot_row, std::size_t from) {
  const Scalar factor = target[from];
  Scalar tmp;
  for (std::size_t c = from; c < target.size(); ++c) {
    if (is_zero(pivot_row[c])) continue;
    tmp = factor * pivot_row[c];
    target[c] -= tmp;
  }
}

template <bool Parallel>
EchelonForm reduce(Matrix m) {
  EchelonForm out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(lead).begin());

    auto prow = m.row(lead);
    const Scalar inv = 1 / prow[col];
    for (std::size_t c = col; c < m.cols(); ++c) prow[c] *= inv;

    const auto rows = static_cast<std::ptrdiff_t>(m.rows());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (m.rows() >= kParallelRows)
      for (std::ptrdiff_t r = 0; r < rows; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        if (ur != lead && !is_zero(m(ur, col))) eliminate_row(m.row(ur), m.row(lead), col);
      }
    } else {
      for (std::ptrdiff_t r = 0; r < rows; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        if (ur != lead && !is_zero(m(ur, col))) eliminate_row(m.row(ur), m.row(lead), col);
      }
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<Vector> nullspace_from_echelon(const EchelonForm& e, std::size_t unknowns) {
  std::vector<bool> is_pivot(unknowns, false);
  for (auto c : e.pivot_columns)
    if (c < unknowns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    Vector v(unknowns);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      const auto pc = e.pivot_columns[i];
      if (pc < unknowns) v[pc] = -e.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace

EchelonForm row_reduce(Matrix m) { return reduce<true>(std::move(m)); }

namespace reference {
EchelonForm row_reduce(Matrix m) { return reduce<false>(std::move(m)); }
} // namespace reference

AffineSolutionSet solve_linear_system(const Matrix& a, const Vector& b) {
  require(a.rows() == b.size(), "solve_linear_system: A.rows != b.length");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug(r, n) = b[r];
  }
  const auto e = row_reduce(std::move(aug));

  AffineSolutionSet out;
  const bool inconsistent = !e.pivot_columns.empty() && e.pivot_columns.back() == n;
  out.rank = e.pivot_columns.size() - (inconsistent ? 1 : 0);
  if (inconsistent) return out;

  Vector x(n);
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = e.reduced(i, n);
  out.particular = std::move(x);
  out.nullspace_basis = nullspace_from_echelon(e, n);
  return out;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivot_columns.size(); }

std::vector<Vector> nullspace(const Matrix& a) { return nullspace_from_echelon(row_reduce(a), a.cols()); }

InverseResult invert(const Matrix& a) {
  require(a.square(), "invert: matrix is not square");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug(r, n + r) = 1;
  }
  const auto e = row_reduce(std::move(aug));

  InverseResult out;
  for (auto c : e.pivot_columns)
    if (c < n) ++out.rank;
  if (out.rank < n) return out;

  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  out.inverse = std::move(inv);
  return out;
}

std::vector<Scalar> minimal_polynomial(const Matrix& a) {
  require(a.square(), "minimal_polynomial: matrix is not square");
  const std::size_t n = a.rows();
  const std::size_t flat = n * n;

  std::vector<Matrix> powers{Matrix::identity(n)};
  for (std::size_t degree = 1; degree <= n; ++degree) {
    powers.push_back(powers.back() * a);
    // Columns are vec(A^0) .. vec(A^{degree-1}); right-hand side is -vec(A^degree).
    Matrix lhs(flat, degree);
    Vector rhs(flat);
    for (std::size_t k = 0; k < degree; ++k)
      for (std::size_t i = 0; i < flat; ++i) lhs(i, k) = powers[k].entries()[i];
    for (std::size_t i = 0; i < flat; ++i) rhs[i] = -powers[degree].entries()[i];

    auto sol = solve_linear_system(lhs, rhs);
    if (!sol.consistent()) continue;
    auto coefficients = std::move(*sol.particular);
    coefficients.push_back(1);
    return coefficients;
  }
  // Cayley-Hamilton guarantees termination at degree n; n = 0 lands here.
  return {1};
}

Matrix evaluate_polynomial(const std::vector<Scalar>& coefficients, const Matrix& a) {
  require(a.square(), "evaluate_polynomial: matrix is not square");
  Matrix result(a.rows(), a.cols());
  // Horner from the leading coefficient down.
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    result = result * a;
    for (std::size_t i = 0; i < a.rows(); ++i) result(i, i) += *it;
  }
  return result;
}

} // namespace cliffhopf
