#pragma once

#include <cstddef>
#include <span>

#include "dsdkit/graph.hpp"
#include "dsdkit/matrix.hpp"
#include "dsdkit/spectral.hpp"

namespace dsdkit {

// (sum_i |x_i|^q)^{1/q}; q = infinity gives the max norm. The general-q
// path factors out max|x_i| before powering. q < 1 (or NaN) is rejected.
double lq_norm(std::span<const double> x, double q);

// ‖a - b‖_q over n entries without materializing the difference.
double lq_diff_norm(const double* a, const double* b, std::size_t n, double q);

// All-pairs diffusion distances for one norm exponent. Symmetric with a
// zero diagonal; a pullback of an L_q norm, so the triangle inequality
// holds up to rounding.
struct DsdMatrix {
  std::size_t n = 0;
  double q = 1.0;
  Matrix values;
};

// ‖(1_u - 1_v) G‖_q from the assembled Green's function.
double dsd(const GreensMatrix& gm, std::size_t u, std::size_t v, double q);

// Lazy-walk scaling: dsd(...) / (1 - alpha), alpha in [0, 1).
double dsd_lazy(const GreensMatrix& gm, std::size_t u, std::size_t v, double q, double alpha);

// Reuses the one assembled G for every pair; rows are processed in
// parallel with disjoint writes.
DsdMatrix dsd_all_pairs(const GreensMatrix& gm, double q);

// (I - D^{-1} A + W)^{-1} where W stacks the stationary distribution in
// every row. Solved densely with partial pivoting; the inverse is
// re-verified against ‖Z M - I‖_inf <= 1e-8 before use.
Matrix fundamental_matrix_inverse(const Graph& g);

// Row-difference L_q norm of the fundamental-matrix inverse. Independent
// computation path from dsd(); the two agree on connected graphs.
double dsd_fundamental(const Graph& g, std::size_t u, std::size_t v, double q);

// sqrt(2)/lambda_1 * sqrt(max_degree/min_degree); every DSD_2 value on a
// connected simple graph stays at or below this.
double dsd2_upper_bound(const SpectralDecomposition& sd, const Graph& g);

// 1 / (diameter * volume); lambda_1 strictly exceeds it on connected graphs.
double lambda1_diameter_bound(const Graph& g);

}  // namespace dsdkit
