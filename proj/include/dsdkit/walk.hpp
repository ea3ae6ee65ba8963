#pragma once

#include <cstdint>
#include <vector>

#include "dsdkit/graph.hpp"
#include "dsdkit/matrix.hpp"

namespace dsdkit {

struct WalkParams {
  double alpha = 0.0;          // laziness in [0, 1)
  std::size_t steps = 0;       // k; visits are counted at t = 0..k
  std::size_t num_walks = 1;   // Monte Carlo only
  std::uint64_t seed = 0;      // Monte Carlo only
};

// Visit-expectation vector for one origin. The origin's time-0 position
// counts as a visit, so the entries sum to k+1.
struct WalkState {
  std::vector<double> he;
  std::size_t origin = 0;
  WalkParams params;
};

// T_alpha = alpha I + (1 - alpha) D^{-1} A, dense and row-stochastic.
Matrix transition_matrix(const Graph& g, double alpha);

// he = sum_{t=0}^{k} (row u of T_alpha^t), by iterated row-vector products.
WalkState visit_expectations_exact(const Graph& g, std::size_t u, const WalkParams& params);

// (1 - alpha) * ‖he(u) - he(v)‖_q at the given k. Converges to DSD_q as
// k grows. alpha = 0 on a bipartite graph has no limit and is rejected
// with errc::nonconvergent_walk.
double dsd_walk_estimate(const Graph& g, std::size_t u, std::size_t v, double q,
                         const WalkParams& params);

// Mean visit counts over params.num_walks seeded walks. Each walk draws
// from its own stream derived from (seed, walk index), and the counts are
// integers, so the result is identical for any thread count.
WalkState monte_carlo_visits(const Graph& g, std::size_t u, const WalkParams& params);

struct OptimalAlpha {
  double alpha_star;  // 1 - 2/(lambda1 + lambda_max), clamped at 0
  double rate;        // mixing rate achieved at alpha_star
};

// Minimizer of the walk-difference convergence rate. When
// lambda1 + lambda_max <= 2 the unconstrained optimum would be negative;
// alpha_star = 0 with the alpha = 0 rate is returned instead.
OptimalAlpha optimal_alpha(double lambda1, double lambda_max);

// max{1 - (1-alpha) lambda1, (1-alpha) lambda_max - 1}; < 1 iff the
// walk-difference series converges geometrically.
double convergence_rate(double lambda1, double lambda_max, double alpha);

// Incremental tracker of the scaled He difference between two origins;
// powers walk-compare and the convergence diagnostics. step() advances k
// by one; estimate(q) is (1-alpha) ‖he(u)-he(v)‖_q at the current k.
class WalkDiffIterator {
 public:
  WalkDiffIterator(const Graph& g, std::size_t u, std::size_t v, double alpha);

  void step();
  std::size_t k() const { return k_; }
  double estimate(double q) const;
  // (1-alpha) ‖ last per-step increment ‖_q — the stopping-rule quantity.
  double increment_norm(double q) const;
  // (1-alpha) (he(u) - he(v)) at the current k; converges to the Green's
  // row difference, whose decay rate the convergence diagnostics measure.
  std::vector<double> scaled_sum() const;

 private:
  const Graph& g_;
  double alpha_;
  std::size_t k_ = 0;
  std::vector<double> diff_;     // row of T^k difference
  std::vector<double> sum_;      // accumulated he difference
  std::vector<double> scratch_;
};

struct ConvergedEstimate {
  double value = 0.0;
  std::size_t k = 0;
  bool converged = false;
};

// Iterates until the scaled per-step increment drops below
// tol * (1 - rate), capping at k_max. rate is the caller-measured mixing
// rate (see convergence_rate); the same bipartite alpha = 0 rejection as
// dsd_walk_estimate applies.
ConvergedEstimate dsd_walk_converged(const Graph& g, std::size_t u, std::size_t v, double q,
                                     double alpha, double rate, double tol = 1e-6,
                                     std::size_t k_max = 100000);

}  // namespace dsdkit
