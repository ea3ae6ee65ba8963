#include "dsdkit/dsd.hpp"

#include <cmath>

#include "dsdkit/error.hpp"
#include "dsdkit/kernels.hpp"
#include "dsdkit/linalg.hpp"
#include "dsdkit/parallel.hpp"

namespace dsdkit {

namespace {

void check_q(double q) {
  if (std::isnan(q) || q < 1.0) fail(errc::invalid_parameter, "norm exponent must satisfy q >= 1");
}

double general_q_diff_norm(const double* a, const double* b, std::size_t n, double q) {
  const double m = kern::ops().max_abs_diff(a, b, n);
  if (m == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::pow(std::abs(a[i] - b[i]) / m, q);
  return m * std::pow(acc, 1.0 / q);
}

}  // namespace

double lq_diff_norm(const double* a, const double* b, std::size_t n, double q) {
  check_q(q);
  const auto& k = kern::ops();
  if (std::isinf(q)) return k.max_abs_diff(a, b, n);
  if (q == 1.0) return k.sum_abs_diff(a, b, n);
  if (q == 2.0) return std::sqrt(k.sum_sq_diff(a, b, n));
  return general_q_diff_norm(a, b, n, q);
}

double lq_norm(std::span<const double> x, double q) {
  check_q(q);
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  if (std::isinf(q) || m == 0.0) return m;
  if (q == 1.0) {
    double acc = 0.0;
    for (double v : x) acc += std::abs(v);
    return acc;
  }
  if (q == 2.0) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return std::sqrt(acc);
  }
  double acc = 0.0;
  for (double v : x) acc += std::pow(std::abs(v) / m, q);
  return m * std::pow(acc, 1.0 / q);
}

double dsd(const GreensMatrix& gm, std::size_t u, std::size_t v, double q) {
  const std::size_t n = gm.G.rows();
  if (u >= n || v >= n) fail(errc::invalid_vertex, "vertex out of range");
  check_q(q);
  if (u == v) return 0.0;
  return lq_diff_norm(gm.G.row(u), gm.G.row(v), n, q);
}

double dsd_lazy(const GreensMatrix& gm, std::size_t u, std::size_t v, double q, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    fail(errc::invalid_parameter, "lazy parameter must satisfy 0 <= alpha < 1");
  return dsd(gm, u, v, q) / (1.0 - alpha);
}

DsdMatrix dsd_all_pairs(const GreensMatrix& gm, double q) {
  check_q(q);
  const std::size_t n = gm.G.rows();
  DsdMatrix out;
  out.n = n;
  out.q = q;
  out.values = Matrix(n, n);
  par::parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t u = lo; u < hi; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        const double d = lq_diff_norm(gm.G.row(u), gm.G.row(v), n, q);
        out.values(u, v) = d;
        out.values(v, u) = d;
      }
  });
  return out;
}

Matrix fundamental_matrix_inverse(const Graph& g) {
  if (!is_connected(g)) fail(errc::disconnected, "fundamental matrix needs a connected graph");
  const std::size_t n = g.size();
  const double vol = static_cast<double>(g.volume());

  // M = I - D^{-1} A + W, W(x, y) = d_y / vol.
  Matrix m(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) m(x, y) = static_cast<double>(g.degree(y)) / vol;
    m(x, x) += 1.0;
    const double inv_deg = 1.0 / static_cast<double>(g.degree(x));
    for (std::uint32_t y : g.neighbors(x)) m(x, y) -= inv_deg;
  }

  Matrix z = lu_inverse(lu_factor(m));

  // Post-solve residual: ‖Z M - I‖_inf.
  const Matrix mt = transpose(m);
  double residual = 0.0;
  const auto& k = kern::ops();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = k.dot(z.row(i), mt.row(j), n) - (i == j ? 1.0 : 0.0);
      residual = std::max(residual, std::abs(v));
    }
  if (residual > 1e-8)
    fail(errc::numerical_singularity,
         "fundamental-matrix inverse residual " + std::to_string(residual));
  return z;
}

double dsd_fundamental(const Graph& g, std::size_t u, std::size_t v, double q) {
  if (u >= g.size() || v >= g.size()) fail(errc::invalid_vertex, "vertex out of range");
  check_q(q);
  if (u == v) return 0.0;
  const Matrix z = fundamental_matrix_inverse(g);
  return lq_diff_norm(z.row(u), z.row(v), g.size(), q);
}

double dsd2_upper_bound(const SpectralDecomposition& sd, const Graph& g) {
  const double ratio =
      static_cast<double>(g.max_degree()) / static_cast<double>(g.min_degree());
  return std::sqrt(2.0) / sd.lambda1() * std::sqrt(ratio);
}

double lambda1_diameter_bound(const Graph& g) {
  const unsigned m = diameter(g);
  return 1.0 / (static_cast<double>(m) * static_cast<double>(g.volume()));
}

}  // namespace dsdkit
