#pragma once

#include <cstdint>
#include <vector>

#include "dsdkit/graph.hpp"

namespace dsdkit {

// Expected-degree sequence for the Chung-Lu model. Validates positivity
// and w_i w_j rho <= 1 on construction.
class WeightSequence {
 public:
  explicit WeightSequence(std::vector<double> weights);

  const std::vector<double>& weights() const noexcept { return weights_; }
  double rho() const noexcept { return rho_; }
  double min_weight() const noexcept { return min_; }
  double max_weight() const noexcept { return max_; }
  std::size_t size() const noexcept { return weights_.size(); }

 private:
  std::vector<double> weights_;
  double rho_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;
};

// Erdos-Renyi G(n, p): each of the C(n,2) pairs independently with
// probability p. No self-loops. Reproducible from the seed.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

// Chung-Lu G(w_1..w_n): pair (i, j) with i <= j appears with probability
// w_i w_j rho; i = j gives a self-loop (degree contribution 1).
Graph chung_lu(const WeightSequence& w, std::uint64_t seed);

struct ConcentrationModel {
  enum class Kind { gnp, chung_lu };
  Kind kind;
  double parameter;  // p for gnp, w_min for chung_lu

  static ConcentrationModel for_gnp(double p) { return {Kind::gnp, p}; }
  static ConcentrationModel for_chung_lu(double w_min) { return {Kind::chung_lu, w_min}; }
};

// Eigenvalue-concentration audit: measures eps_obs = max_{i>=1} |1 - λ_i|
// against the model prediction 3/sqrt(np) (or 3/sqrt(w_min)) with a fixed
// 1.5 slack. Reports rather than throws, even on disconnected input.
struct ConcentrationReport {
  bool connected = false;
  double epsilon_observed = 0.0;
  double epsilon_predicted = 0.0;
  double slack = 1.5;
  bool pass = false;
};

ConcentrationReport concentration_audit(const Graph& g, const ConcentrationModel& model);

// Interval 2^{1/q} ± (eps/(1-eps)) sqrt(Δ/d_u + Δ/d_v), with the extra
// n^{1/q - 1/2} factor for 1 <= q < 2. Requires eps in (0, 1/2).
struct DsdInterval {
  double lower = 0.0;
  double upper = 0.0;
  double center = 0.0;
  double half_width = 0.0;
};

DsdInterval dsd_concentration_bound(const Graph& g, std::size_t u, std::size_t v, double q,
                                    double epsilon);

}  // namespace dsdkit
