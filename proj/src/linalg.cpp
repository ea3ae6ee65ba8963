#include "dsdkit/linalg.hpp"

#include <cmath>
#include <utility>

#include "dsdkit/error.hpp"
#include "dsdkit/kernels.hpp"

namespace dsdkit {

LuDecomposition lu_factor(Matrix a) {
  if (a.rows() != a.cols()) fail(errc::invalid_parameter, "LU needs a square matrix");
  const std::size_t n = a.rows();
  const auto& k = kern::ops();

  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);

  double scale = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) scale = std::max(scale, std::abs(a.data()[i]));
  const double tiny = scale * 1e-14 + 1e-300;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best <= tiny)
      fail(errc::numerical_singularity, "pivot " + std::to_string(col) + " collapsed");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(perm[col], perm[pivot]);
    }
    const double inv_pivot = 1.0 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double m = a(r, col) * inv_pivot;
      a(r, col) = m;
      if (m != 0.0) k.axpy(-m, a.row(col) + col + 1, a.row(r) + col + 1, n - col - 1);
    }
  }
  return {std::move(a), std::move(perm)};
}

std::vector<double> lu_solve(const LuDecomposition& f, std::span<const double> b) {
  const std::size_t n = f.lu.rows();
  if (b.size() != n) fail(errc::invalid_parameter, "rhs size mismatch");
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[static_cast<std::size_t>(f.perm[i])];
  // forward: L y = P b
  for (std::size_t i = 1; i < n; ++i) {
    double acc = x[i];
    const double* row = f.lu.row(i);
    for (std::size_t j = 0; j < i; ++j) acc -= row[j] * x[j];
    x[i] = acc;
  }
  // backward: U x = y
  for (std::size_t ii = n; ii-- > 0;) {
    double acc = x[ii];
    const double* row = f.lu.row(ii);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= row[j] * x[j];
    x[ii] = acc / row[ii];
  }
  return x;
}

Matrix lu_inverse(const LuDecomposition& f) {
  const std::size_t n = f.lu.rows();
  Matrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t col = 0; col < n; ++col) {
    e[col] = 1.0;
    const std::vector<double> x = lu_solve(f, e);
    e[col] = 0.0;
    for (std::size_t r = 0; r < n; ++r) inv(r, col) = x[r];
  }
  return inv;
}

Matrix invert(const Matrix& a) { return lu_inverse(lu_factor(a)); }

}  // namespace dsdkit
