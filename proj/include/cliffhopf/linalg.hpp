#pragma once

#include "cliffhopf/matrix.hpp"

#include <optional>
#include <vector>

namespace cliffhopf {

/// Exact solution set {particular + span(nullspace_basis)} of A x = b.
struct AffineSolutionSet {
  std::optional<Vector> particular; ///< absent iff the system is inconsistent
  std::vector<Vector> nullspace_basis;
  std::size_t rank = 0;

  bool consistent() const { return particular.has_value(); }
  bool unique() const { return consistent() && nullspace_basis.empty(); }
  std::size_t dimension() const { return nullspace_basis.size(); }
};

/// Reduced row echelon form with first-nonzero pivoting. Returns the pivot
/// column of every nonzero row, in order.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

EchelonForm row_reduce(Matrix m);

AffineSolutionSet solve_linear_system(const Matrix& a, const Vector& b);

std::size_t rank(const Matrix& a);

/// Basis of {x : A x = 0}, one vector per free column, in RREF normal form.
std::vector<Vector> nullspace(const Matrix& a);

struct InverseResult {
  std::optional<Matrix> inverse;
  std::size_t rank = 0;
  bool singular() const { return !inverse.has_value(); }
};

InverseResult invert(const Matrix& a);

inline bool is_invertible(const Matrix& a) { return !invert(a).singular(); }

/// Monic coefficients c_0 .. c_{d-1}, 1 (ascending powers) of the minimal
/// polynomial, found as the first linear dependency among I, A, A^2, ...
std::vector<Scalar> minimal_polynomial(const Matrix& a);

/// p(A) for ascending coefficients.
Matrix evaluate_polynomial(const std::vector<Scalar>& coefficients, const Matrix& a);

namespace reference {
/// Single-threaded elimination; same pivot rule as row_reduce.
EchelonForm row_reduce(Matrix m);
} // namespace reference

} // namespace cliffhopf
