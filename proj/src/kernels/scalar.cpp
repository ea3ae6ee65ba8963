#include <cmath>

#include "dsdkit/kernels.hpp"

namespace dsdkit::kern {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpy2_scalar(double f, const double* a, double g, const double* b, double* y,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += f * a[i] + g * b[i];
}

void rotate_pair_scalar(double* x, double* y, double c, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double sum_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::abs(a[i] - b[i]);
  return acc;
}

double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc = std::max(acc, std::abs(a[i] - b[i]));
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{
      dot_scalar,          axpy_scalar,        axpy2_scalar,       rotate_pair_scalar,
      sum_abs_diff_scalar, sum_sq_diff_scalar, max_abs_diff_scalar,
  };
  return table;
}

}  // namespace dsdkit::kern
