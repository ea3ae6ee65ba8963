#include "dsdkit/random_graphs.hpp"

#include <cmath>

#include "dsdkit/error.hpp"
#include "dsdkit/rng.hpp"
#include "dsdkit/spectral.hpp"

namespace dsdkit {

WeightSequence::WeightSequence(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) fail(errc::invalid_weights, "empty weight sequence");
  double sum = 0.0;
  min_ = weights_.front();
  max_ = weights_.front();
  for (double w : weights_) {
    if (!(w > 0.0)) fail(errc::invalid_weights, "weights must be positive");
    sum += w;
    min_ = std::min(min_, w);
    max_ = std::max(max_, w);
  }
  rho_ = 1.0 / sum;
  if (max_ * max_ * rho_ > 1.0 + 1e-12)
    fail(errc::invalid_weights, "w_i w_j rho exceeds 1 (largest pair probability " +
                                    std::to_string(max_ * max_ * rho_) + ")");
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) fail(errc::invalid_parameter, "G(n,p) needs n >= 2");
  if (!(p > 0.0 && p < 1.0)) fail(errc::invalid_parameter, "G(n,p) needs p in (0, 1)");
  rng::Engine eng(rng::mix(seed));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (eng.next_unit() < p)
        edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  return Graph::from_pairs(n, edges);
}

Graph chung_lu(const WeightSequence& w, std::uint64_t seed) {
  const std::size_t n = w.size();
  const double rho = w.rho();
  const auto& weights = w.weights();
  rng::Engine eng(rng::mix(seed));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (eng.next_unit() < weights[i] * weights[j] * rho)
        edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  return Graph::from_pairs(n, edges);
}

ConcentrationReport concentration_audit(const Graph& g, const ConcentrationModel& model) {
  ConcentrationReport report;
  report.connected = is_connected(g);

  const std::vector<double> spectrum = laplacian_eigenvalues(g);
  double eps = 0.0;
  for (std::size_t i = 1; i < spectrum.size(); ++i)
    eps = std::max(eps, std::abs(1.0 - spectrum[i]));
  report.epsilon_observed = eps;

  switch (model.kind) {
    case ConcentrationModel::Kind::gnp:
      report.epsilon_predicted = 3.0 / std::sqrt(static_cast<double>(g.size()) * model.parameter);
      break;
    case ConcentrationModel::Kind::chung_lu:
      report.epsilon_predicted = 3.0 / std::sqrt(model.parameter);
      break;
  }
  report.pass =
      report.connected && report.epsilon_observed <= report.slack * report.epsilon_predicted;
  return report;
}

DsdInterval dsd_concentration_bound(const Graph& g, std::size_t u, std::size_t v, double q,
                                    double epsilon) {
  if (u >= g.size() || v >= g.size()) fail(errc::invalid_vertex, "vertex out of range");
  if (std::isnan(q) || q < 1.0) fail(errc::invalid_parameter, "q must satisfy q >= 1");
  if (!(epsilon > 0.0 && epsilon < 0.5))
    fail(errc::invalid_parameter, "concentration bound needs epsilon in (0, 1/2)");

  const double delta = static_cast<double>(g.max_degree());
  double half = epsilon / (1.0 - epsilon) *
                std::sqrt(delta / static_cast<double>(g.degree(u)) +
                          delta / static_cast<double>(g.degree(v)));
  if (q < 2.0) half *= std::pow(static_cast<double>(g.size()), 1.0 / q - 0.5);

  DsdInterval interval;
  interval.center = std::pow(2.0, 1.0 / q);
  interval.half_width = half;
  interval.lower = interval.center - half;
  interval.upper = interval.center + half;
  return interval;
}

}  // namespace dsdkit
