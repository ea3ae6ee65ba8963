#include "dsdkit/matrix.hpp"

#include <cmath>

namespace dsdkit {

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  const double* p = a.data();
  const std::size_t total = a.rows() * a.cols();
  for (std::size_t i = 0; i < total; ++i) m = std::max(m, std::abs(p[i]));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  const double* pa = a.data();
  const double* pb = b.data();
  const std::size_t total = a.rows() * a.cols();
  for (std::size_t i = 0; i < total; ++i) m = std::max(m, std::abs(pa[i] - pb[i]));
  return m;
}

double max_asymmetry(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - a(j, i)));
  return m;
}

}  // namespace dsdkit
