#include "dsdkit/sym_eigen.hpp"

#include <cmath>
#include <cstddef>

#include "dsdkit/error.hpp"
#include "dsdkit/kernels.hpp"

namespace dsdkit {

namespace {

constexpr int kMaxQlIterations = 50;

// Householder reduction to tridiagonal form (diagonal d, subdiagonal e).
// u holds the transposed transformation matrix on exit: row r of u is
// column r of the accumulated orthogonal factor.
void tridiagonalize(Matrix& u, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = u.rows();
  const auto& k = kern::ops();

  for (std::size_t j = 0; j < n; ++j) d[j] = u(j, n - 1);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t kk = 0; kk < i; ++kk) scale += std::abs(d[kk]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = u(j, i - 1);
        u(j, i) = 0.0;
        u(i, j) = 0.0;
      }
    } else {
      for (std::size_t kk = 0; kk < i; ++kk) {
        d[kk] /= scale;
        h += d[kk] * d[kk];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      // Apply the similarity transform to the leading block.
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        u(i, j) = f;
        g = e[j] + u(j, j) * f;
        const std::size_t len = i - 1 - j;
        if (len > 0) {
          const double* rowj = u.row(j) + j + 1;
          g += k.dot(rowj, d.data() + j + 1, len);
          k.axpy(f, rowj, e.data() + j + 1, len);
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        k.axpy2(-f, e.data() + j, -g, d.data() + j, u.row(j) + j, i - j);
        d[j] = u(j, i - 1);
        u(j, i) = 0.0;
      }
    }
    d[i] = h;
  }
}

// Back-accumulation of the Householder transforms into u.
void accumulate_transforms(Matrix& u, std::vector<double>& d) {
  const std::size_t n = u.rows();
  const auto& k = kern::ops();

  for (std::size_t i = 0; i + 1 < n; ++i) {
    u(i, n - 1) = u(i, i);
    u(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t kk = 0; kk <= i; ++kk) d[kk] = u(i + 1, kk) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        const double g = k.dot(u.row(i + 1), u.row(j), i + 1);
        k.axpy(-g, d.data(), u.row(j), i + 1);
      }
    }
    for (std::size_t kk = 0; kk <= i; ++kk) u(i + 1, kk) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = u(j, n - 1);
    u(j, n - 1) = 0.0;
  }
  u(n - 1, n - 1) = 1.0;
}

// Implicit-shift QL on the tridiagonal (d, e); rotations are applied to
// the rows of u when accumulate is set.
void ql_iterate(std::vector<double>& d, std::vector<double>& e, Matrix& u, bool accumulate) {
  const std::size_t n = d.size();
  const auto& kt = kern::ops();

  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);

  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n && std::abs(e[m]) > eps * tst1) ++m;
    if (m == n) --m;

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxQlIterations)
          fail(errc::eigensolver_failure,
               "QL sweep did not converge at eigenvalue " + std::to_string(l));

        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = c, c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (accumulate) kt.rotate_pair(u.row(i), u.row(i + 1), c, s, u.cols());
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

SymEigenResult sym_eigen(const Matrix& a, bool want_vectors) {
  if (a.rows() != a.cols() || a.rows() == 0)
    fail(errc::invalid_parameter, "eigensolver needs a nonempty square matrix");
  const std::size_t n = a.rows();

  if (n == 1) {
    SymEigenResult res;
    res.values = {a(0, 0)};
    if (want_vectors) res.vectors = Matrix::identity(1);
    return res;
  }

  Matrix u = a;  // transposed working copy; input symmetry makes the copy exact
  std::vector<double> d(n, 0.0), e(n, 0.0);

  tridiagonalize(u, d, e);
  if (want_vectors) {
    accumulate_transforms(u, d);  // also recovers the tridiagonal diagonal into d
  } else {
    for (std::size_t j = 0; j < n; ++j) d[j] = u(j, j);
  }
  ql_iterate(d, e, u, want_vectors);

  // Ascending selection sort; rows of u travel with their eigenvalues.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < n; ++j)
      if (d[order[j]] < d[order[best]]) best = j;
    if (best != i) std::swap(order[i], order[best]);
  }

  SymEigenResult res;
  res.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.values[i] = d[order[i]];

  if (want_vectors) {
    res.vectors = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const double* row = u.row(order[i]);
      std::size_t arg = 0;
      double best = 0.0;
      for (std::size_t x = 0; x < n; ++x)
        if (std::abs(row[x]) > best) {
          best = std::abs(row[x]);
          arg = x;
        }
      const double sign = row[arg] < 0 ? -1.0 : 1.0;
      for (std::size_t x = 0; x < n; ++x) res.vectors(x, i) = sign * row[x];
    }
  }
  return res;
}

}  // namespace dsdkit
