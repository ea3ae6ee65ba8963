#pragma once

#include <cstddef>
#include <vector>

#include "dsdkit/graph.hpp"
#include "dsdkit/matrix.hpp"

namespace dsdkit {

struct SpectralOptions {
  // Eigenvalues below zero_tolerance * max(1, lambda_max) count as zero.
  double zero_tolerance = 1e-9;
  // Dense-work guard: reject graphs with more vertices than this.
  std::size_t size_limit = 8192;
};

// Eigen-system of the normalized Laplacian. Immutable once built; safe for
// shared concurrent reads.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending; eigenvalues[0] ~ 0
  Matrix eigenvectors;              // (x, l) = phi_l(x); empty in values-only mode
  double zero_threshold = 0.0;      // absolute threshold actually applied

  std::size_t zero_count() const;
  double lambda1() const;  // smallest eigenvalue above the zero threshold
  double lambda_max() const { return eigenvalues.back(); }
};

// Green's function pair: G without boundary and its normalized conjugate,
// plus the max-norm residuals of the defining identities measured at
// assembly time.
struct GreensMatrix {
  Matrix G;             // row differences of this matrix give DSD
  Matrix G_normalized;  // D^{1/2} G D^{-1/2}
  double residual_g1 = 0.0;
  double residual_g2 = 0.0;
};

struct GreensResiduals {
  double g1 = 0.0;           // (G L)(x,y) vs I(x,y) - d_y/vol
  double g2 = 0.0;           // max |row sum of G|
  double conjugation = 0.0;  // G_normalized vs D^{1/2} G D^{-1/2}
};

// I - D^{-1/2} A D^{-1/2}; throws errc::isolated_vertex on degree-0
// vertices and errc::size_limit past the dense guard.
Matrix normalized_laplacian(const Graph& g, const SpectralOptions& opts = {});

// Eigendecomposition of a symmetric matrix (checked to 1e-12).
SpectralDecomposition eigendecompose(const Matrix& laplacian, const SpectralOptions& opts = {});

// Builds the Laplacian and decomposes it, then cross-checks the spectral
// zero count against combinatorial connectivity
// (errc::connectivity_mismatch on disagreement).
SpectralDecomposition eigendecompose(const Graph& g, const SpectralOptions& opts = {});

// Eigenvalues only; skips the O(n^3) eigenvector accumulation.
std::vector<double> laplacian_eigenvalues(const Graph& g, const SpectralOptions& opts = {});

// Assembles G and G_normalized from the spectrum (zero mode skipped).
// Requires exactly one near-zero eigenvalue; throws errc::disconnected
// otherwise, and also when lambda1 sits below the zero threshold.
GreensMatrix greens_function(const SpectralDecomposition& sd, const Graph& g);

// H_t = sum_l exp(-lambda_l t) phi_l phi_l^T; t < 0 is rejected.
Matrix heat_kernel(const SpectralDecomposition& sd, double t);

GreensResiduals verify_greens_identities(const GreensMatrix& gm, const Graph& g);

}  // namespace dsdkit
