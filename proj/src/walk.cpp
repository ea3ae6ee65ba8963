#include "dsdkit/walk.hpp"

#include <cmath>

#include "dsdkit/dsd.hpp"
#include "dsdkit/error.hpp"
#include "dsdkit/parallel.hpp"
#include "dsdkit/rng.hpp"

namespace dsdkit {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    fail(errc::invalid_parameter, "lazy parameter must satisfy 0 <= alpha < 1");
}

void check_degrees(const Graph& g) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.degree(v) == 0)
      fail(errc::isolated_vertex, "vertex " + std::to_string(v) + " has degree 0");
}

void check_vertex(const Graph& g, std::size_t u) {
  if (u >= g.size()) fail(errc::invalid_vertex, "vertex out of range");
}

// y = x T_alpha for a row vector x: y_j = alpha x_j + (1-alpha) sum_{i in
// N(j)} x_i / d_i. Neighbor lists are sorted, so the summation order is
// fixed and results are reproducible.
void apply_transition_row(const Graph& g, double alpha, const std::vector<double>& x,
                          std::vector<double>& y) {
  const std::size_t n = g.size();
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::uint32_t i : g.neighbors(j)) acc += x[i] / static_cast<double>(g.degree(i));
    y[j] = alpha * x[j] + (1.0 - alpha) * acc;
  }
}

}  // namespace

Matrix transition_matrix(const Graph& g, double alpha) {
  check_alpha(alpha);
  check_degrees(g);
  const std::size_t n = g.size();
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i) = alpha;
    const double hop = (1.0 - alpha) / static_cast<double>(g.degree(i));
    for (std::uint32_t j : g.neighbors(i)) t(i, j) += hop;
  }
  return t;
}

WalkState visit_expectations_exact(const Graph& g, std::size_t u, const WalkParams& params) {
  check_alpha(params.alpha);
  check_degrees(g);
  check_vertex(g, u);

  const std::size_t n = g.size();
  std::vector<double> p(n, 0.0), next(n, 0.0), he(n, 0.0);
  p[u] = 1.0;
  he[u] = 1.0;
  for (std::size_t t = 1; t <= params.steps; ++t) {
    apply_transition_row(g, params.alpha, p, next);
    std::swap(p, next);
    for (std::size_t j = 0; j < n; ++j) he[j] += p[j];
  }

  WalkState state;
  state.he = std::move(he);
  state.origin = u;
  state.params = params;
  return state;
}

WalkDiffIterator::WalkDiffIterator(const Graph& g, std::size_t u, std::size_t v, double alpha)
    : g_(g), alpha_(alpha), diff_(g.size(), 0.0), sum_(g.size(), 0.0), scratch_(g.size(), 0.0) {
  check_alpha(alpha);
  check_degrees(g);
  check_vertex(g, u);
  check_vertex(g, v);
  diff_[u] += 1.0;
  diff_[v] -= 1.0;
  sum_ = diff_;
}

void WalkDiffIterator::step() {
  apply_transition_row(g_, alpha_, diff_, scratch_);
  std::swap(diff_, scratch_);
  for (std::size_t j = 0; j < sum_.size(); ++j) sum_[j] += diff_[j];
  ++k_;
}

double WalkDiffIterator::estimate(double q) const {
  return (1.0 - alpha_) * lq_norm(sum_, q);
}

double WalkDiffIterator::increment_norm(double q) const {
  return (1.0 - alpha_) * lq_norm(diff_, q);
}

std::vector<double> WalkDiffIterator::scaled_sum() const {
  std::vector<double> out(sum_.size());
  for (std::size_t j = 0; j < sum_.size(); ++j) out[j] = (1.0 - alpha_) * sum_[j];
  return out;
}

namespace {

void reject_nonconvergent(const Graph& g, double alpha) {
  if (alpha == 0.0 && is_bipartite(g))
    fail(errc::nonconvergent_walk,
         "alpha = 0 on a bipartite graph: the walk difference oscillates without a limit");
}

}  // namespace

double dsd_walk_estimate(const Graph& g, std::size_t u, std::size_t v, double q,
                         const WalkParams& params) {
  if (!is_connected(g)) fail(errc::disconnected, "walk estimate needs a connected graph");
  reject_nonconvergent(g, params.alpha);
  WalkDiffIterator it(g, u, v, params.alpha);
  for (std::size_t t = 0; t < params.steps; ++t) it.step();
  return it.estimate(q);
}

ConvergedEstimate dsd_walk_converged(const Graph& g, std::size_t u, std::size_t v, double q,
                                     double alpha, double rate, double tol, std::size_t k_max) {
  if (!is_connected(g)) fail(errc::disconnected, "walk estimate needs a connected graph");
  reject_nonconvergent(g, alpha);
  if (!(rate >= 0.0 && rate < 1.0))
    fail(errc::invalid_parameter, "stopping rule needs a mixing rate in [0, 1)");

  const double threshold = tol * (1.0 - rate);
  WalkDiffIterator it(g, u, v, alpha);
  ConvergedEstimate out;
  while (it.k() < k_max) {
    it.step();
    if (it.increment_norm(q) < threshold) {
      out.converged = true;
      break;
    }
  }
  out.k = it.k();
  out.value = it.estimate(q);
  return out;
}

WalkState monte_carlo_visits(const Graph& g, std::size_t u, const WalkParams& params) {
  check_alpha(params.alpha);
  check_degrees(g);
  check_vertex(g, u);
  if (params.num_walks == 0) fail(errc::invalid_parameter, "num_walks must be positive");

  const std::size_t n = g.size();
  std::vector<std::uint64_t> counts(n, 0);

  // Integer counts with per-walk derived streams: the merge is exact, so
  // any parallel split of the walk indices gives identical results.
  const int workers = par::max_threads();
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(workers) > params.num_walks
          ? params.num_walks
          : static_cast<std::size_t>(workers));
  const std::size_t lanes = partial.size();
  for (auto& lane : partial) lane.assign(n, 0);

  par::parallel_for(0, lanes, [&](std::size_t lane_lo, std::size_t lane_hi) {
    for (std::size_t lane = lane_lo; lane < lane_hi; ++lane) {
      auto& local = partial[lane];
      for (std::size_t w = lane; w < params.num_walks; w += lanes) {
        rng::Engine eng(rng::derive_stream(params.seed, w));
        std::size_t pos = u;
        local[pos] += 1;
        for (std::size_t t = 1; t <= params.steps; ++t) {
          const bool stay = params.alpha > 0.0 && eng.next_unit() < params.alpha;
          if (!stay) {
            const auto& nbrs = g.neighbors(pos);
            pos = nbrs[eng.next_below(static_cast<std::uint32_t>(nbrs.size()))];
          }
          local[pos] += 1;
        }
      }
    }
  });

  for (const auto& lane : partial)
    for (std::size_t j = 0; j < n; ++j) counts[j] += lane[j];

  WalkState state;
  state.he.resize(n);
  const double scale = 1.0 / static_cast<double>(params.num_walks);
  for (std::size_t j = 0; j < n; ++j) state.he[j] = static_cast<double>(counts[j]) * scale;
  state.origin = u;
  state.params = params;
  return state;
}

OptimalAlpha optimal_alpha(double lambda1, double lambda_max) {
  if (!(lambda1 > 0.0)) fail(errc::invalid_spectrum, "lambda_1 must be positive");
  if (lambda1 + lambda_max <= 2.0) return {0.0, convergence_rate(lambda1, lambda_max, 0.0)};
  const double alpha_star = 1.0 - 2.0 / (lambda1 + lambda_max);
  return {alpha_star, (lambda_max - lambda1) / (lambda_max + lambda1)};
}

double convergence_rate(double lambda1, double lambda_max, double alpha) {
  check_alpha(alpha);
  return std::max(1.0 - (1.0 - alpha) * lambda1, (1.0 - alpha) * lambda_max - 1.0);
}

}  // namespace dsdkit
