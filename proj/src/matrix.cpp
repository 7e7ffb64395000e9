#include "cliffhopf/matrix.hpp"

#include <algorithm>

namespace cliffhopf {

namespace {
// Below this many output rows the thread fork costs more than the work.
constexpr std::size_t kParallelRows = 32;

void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}
} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return cliffhopf::is_zero(s); });
}

std::size_t Matrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Scalar& s) { return !cliffhopf::is_zero(s); }));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix shape mismatch in *");
  Matrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic, 4) if (a.rows() >= kParallelRows)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    auto out = c.row(static_cast<std::size_t>(i));
    Scalar tmp;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(static_cast<std::size_t>(i), k);
      if (is_zero(aik)) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (is_zero(brow[j])) continue;
        tmp = aik * brow[j];
        out[j] += tmp;
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require(a.cols() == x.size(), "matrix/vector shape mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!is_zero(a(i, k)) && !is_zero(x[k])) y[i] += a(i, k) * x[k];
  return y;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!is_zero(b(p, q))) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

namespace reference {

Matrix multiply(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix shape mismatch in *");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar sum = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  return c;
}

} // namespace reference

} // namespace cliffhopf
