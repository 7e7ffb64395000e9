#pragma once

#include "cliffhopf/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cliffhopf {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars. Columns are images of basis
/// vectors whenever a Matrix houses a linear operator.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const;
  std::size_t nonzero_count() const;

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix a);

/// Matrix product. Row blocks are distributed over OpenMP threads; zero
/// entries of the left factor are skipped.
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

/// Kronecker product a ⊗ b in the lexicographic pair basis (i_a, i_b).
Matrix kron(const Matrix& a, const Matrix& b);

namespace reference {
/// Single-threaded triple loop; kept as the oracle for the parallel kernel.
Matrix multiply(const Matrix& a, const Matrix& b);
} // namespace reference

} // namespace cliffhopf
