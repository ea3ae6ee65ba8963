#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dsdkit {

// Dense row-major matrix of doubles. All spectral work in this project is
// dense; rows are contiguous so the SIMD kernels can run over them directly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  std::span<const double> row_span(std::size_t i) const { return {row(i), cols_}; }

  double* data() noexcept { return data_.data(); }
  const double* data() const noexcept { return data_.data(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix transpose(const Matrix& a);

// max_{i,j} |a(i,j)|
double max_abs(const Matrix& a);

// max_{i,j} |a(i,j) - b(i,j)|; matrices must have equal shape.
double max_abs_diff(const Matrix& a, const Matrix& b);

// max_{i,j} |a(i,j) - a(j,i)| for a square matrix.
double max_asymmetry(const Matrix& a);

}  // namespace dsdkit
