#include "dsdkit/spectral.hpp"

#include <cmath>

#include "dsdkit/error.hpp"
#include "dsdkit/kernels.hpp"
#include "dsdkit/parallel.hpp"
#include "dsdkit/sym_eigen.hpp"

namespace dsdkit {

std::size_t SpectralDecomposition::zero_count() const {
  std::size_t count = 0;
  for (double v : eigenvalues)
    if (std::abs(v) <= zero_threshold) ++count;
  return count;
}

double SpectralDecomposition::lambda1() const {
  for (double v : eigenvalues)
    if (std::abs(v) > zero_threshold) return v;
  fail(errc::invalid_spectrum, "no nonzero eigenvalue");
}

Matrix normalized_laplacian(const Graph& g, const SpectralOptions& opts) {
  const std::size_t n = g.size();
  if (n == 0) fail(errc::degenerate_graph, "empty graph");
  if (n > opts.size_limit)
    fail(errc::size_limit, "dense spectral work capped at n = " + std::to_string(opts.size_limit));
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      fail(errc::isolated_vertex, "vertex " + std::to_string(v) + " has degree 0");

  std::vector<double> inv_sqrt_deg(n);
  for (std::size_t v = 0; v < n; ++v)
    inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));

  Matrix lap(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    lap(i, i) = 1.0;
    for (std::uint32_t j : g.neighbors(i)) {
      if (j == i)
        lap(i, i) -= inv_sqrt_deg[i] * inv_sqrt_deg[i];
      else
        lap(i, j) = -(inv_sqrt_deg[i] * inv_sqrt_deg[j]);
    }
  }
  return lap;
}

SpectralDecomposition eigendecompose(const Matrix& laplacian, const SpectralOptions& opts) {
  if (laplacian.rows() != laplacian.cols() || laplacian.rows() == 0)
    fail(errc::invalid_parameter, "expected a nonempty square matrix");
  if (max_asymmetry(laplacian) > 1e-12)
    fail(errc::invalid_parameter, "matrix is not symmetric");

  SymEigenResult eig = sym_eigen(laplacian, /*want_vectors=*/true);

  SpectralDecomposition sd;
  sd.eigenvalues = std::move(eig.values);
  sd.eigenvectors = std::move(eig.vectors);
  sd.zero_threshold = opts.zero_tolerance * std::max(1.0, std::abs(sd.eigenvalues.back()));
  return sd;
}

SpectralDecomposition eigendecompose(const Graph& g, const SpectralOptions& opts) {
  SpectralDecomposition sd = eigendecompose(normalized_laplacian(g, opts), opts);

  const double tol = sd.zero_threshold;
  if (sd.eigenvalues.front() < -1e-8 || sd.eigenvalues.back() > 2.0 + 1e-8)
    fail(errc::eigensolver_failure, "Laplacian spectrum escaped [0, 2]");
  if (std::abs(sd.eigenvalues.front()) > tol)
    fail(errc::eigensolver_failure, "lambda_0 missed zero");
  if (is_connected(g) && sd.zero_count() != 1)
    fail(errc::connectivity_mismatch,
         "connected graph produced " + std::to_string(sd.zero_count()) + " zero eigenvalues");
  return sd;
}

std::vector<double> laplacian_eigenvalues(const Graph& g, const SpectralOptions& opts) {
  SymEigenResult eig = sym_eigen(normalized_laplacian(g, opts), /*want_vectors=*/false);
  return std::move(eig.values);
}

GreensMatrix greens_function(const SpectralDecomposition& sd, const Graph& g) {
  const std::size_t n = sd.eigenvalues.size();
  if (sd.eigenvectors.empty()) fail(errc::invalid_parameter, "decomposition lacks eigenvectors");
  if (g.size() != n) fail(errc::invalid_parameter, "graph/decomposition size mismatch");
  if (sd.zero_count() != 1)
    fail(errc::disconnected, "Green's function needs exactly one zero eigenvalue, found " +
                                 std::to_string(sd.zero_count()));
  if (sd.eigenvalues[1] <= sd.zero_threshold)
    fail(errc::disconnected, "lambda_1 below the zero threshold: numerically disconnected");

  // G_normalized = B B^T with B(x, l) = phi_{l+1}(x) / sqrt(lambda_{l+1});
  // the zero mode is skipped outright, never thresholded away.
  Matrix b(n, n - 1);
  for (std::size_t l = 1; l < n; ++l) {
    const double w = 1.0 / std::sqrt(sd.eigenvalues[l]);
    for (std::size_t x = 0; x < n; ++x) b(x, l - 1) = sd.eigenvectors(x, l) * w;
  }

  GreensMatrix gm;
  gm.G_normalized = Matrix(n, n);
  Matrix& gn = gm.G_normalized;
  par::parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
    const auto& k = kern::ops();
    for (std::size_t x = lo; x < hi; ++x)
      for (std::size_t y = x; y < n; ++y) {
        const double v = k.dot(b.row(x), b.row(y), n - 1);
        gn(x, y) = v;
        gn(y, x) = v;
      }
  });

  std::vector<double> sqrt_deg(n);
  for (std::size_t v = 0; v < n; ++v) sqrt_deg[v] = std::sqrt(static_cast<double>(g.degree(v)));

  gm.G = Matrix(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) gm.G(x, y) = gn(x, y) * sqrt_deg[y] / sqrt_deg[x];

  const GreensResiduals res = verify_greens_identities(gm, g);
  gm.residual_g1 = res.g1;
  gm.residual_g2 = res.g2;
  return gm;
}

Matrix heat_kernel(const SpectralDecomposition& sd, double t) {
  if (!(t >= 0.0)) fail(errc::invalid_parameter, "heat kernel needs t >= 0");
  if (sd.eigenvectors.empty()) fail(errc::invalid_parameter, "decomposition lacks eigenvectors");
  const std::size_t n = sd.eigenvalues.size();

  Matrix c(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const double w = std::exp(-0.5 * sd.eigenvalues[l] * t);
    for (std::size_t x = 0; x < n; ++x) c(x, l) = sd.eigenvectors(x, l) * w;
  }

  Matrix h(n, n);
  par::parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
    const auto& k = kern::ops();
    for (std::size_t x = lo; x < hi; ++x)
      for (std::size_t y = x; y < n; ++y) {
        const double v = k.dot(c.row(x), c.row(y), n);
        h(x, y) = v;
        h(y, x) = v;
      }
  });
  return h;
}

GreensResiduals verify_greens_identities(const GreensMatrix& gm, const Graph& g) {
  const std::size_t n = g.size();
  const Matrix& G = gm.G;
  const double vol = static_cast<double>(g.volume());

  GreensResiduals res;

  // (g1): (G L)(x, y) = I(x,y) - d_y / vol with L = I - D^{-1} A.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      double acc = G(x, y);
      for (std::uint32_t z : g.neighbors(y))
        acc -= G(x, z) / static_cast<double>(g.degree(z));
      const double expected = (x == y ? 1.0 : 0.0) - static_cast<double>(g.degree(y)) / vol;
      res.g1 = std::max(res.g1, std::abs(acc - expected));
    }
  }

  // (g2): G 1 = 0.
  for (std::size_t x = 0; x < n; ++x) {
    double sum = 0.0;
    for (std::size_t y = 0; y < n; ++y) sum += G(x, y);
    res.g2 = std::max(res.g2, std::abs(sum));
  }

  // G_normalized = D^{1/2} G D^{-1/2}.
  for (std::size_t x = 0; x < n; ++x) {
    const double sx = std::sqrt(static_cast<double>(g.degree(x)));
    for (std::size_t y = 0; y < n; ++y) {
      const double sy = std::sqrt(static_cast<double>(g.degree(y)));
      res.conjugation =
          std::max(res.conjugation, std::abs(gm.G_normalized(x, y) - sx * G(x, y) / sy));
    }
  }
  return res;
}

}  // namespace dsdkit
