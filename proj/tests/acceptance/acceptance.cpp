// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria marked with runtime budgets enforce them.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dsdkit/closed_form.hpp"
#include "dsdkit/dsd.hpp"
#include "dsdkit/error.hpp"
#include "dsdkit/graph.hpp"
#include "dsdkit/random_graphs.hpp"
#include "dsdkit/rng.hpp"
#include "dsdkit/spectral.hpp"
#include "dsdkit/walk.hpp"
#include "support/oracles.hpp"

#ifndef DSDKIT_CLI_PATH
#define DSDKIT_CLI_PATH "dsdkit"
#endif
#ifndef DSDKIT_GOLDEN_DIR
#define DSDKIT_GOLDEN_DIR "golden"
#endif

using namespace dsdkit;
namespace cf = dsdkit::closed_form;
using clock_type = std::chrono::steady_clock;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Ctx {
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void check_le(double value, double limit, const std::string& what) {
    if (!(value <= limit)) {
      char buf[256];
      std::snprintf(buf, sizeof(buf), "%s: %.6g exceeds %.6g", what.c_str(), value, limit);
      failures.emplace_back(buf);
    }
  }
  void check_close(double value, double expected, double tol, const std::string& what) {
    if (!(std::abs(value - expected) <= tol)) {
      char buf[256];
      std::snprintf(buf, sizeof(buf), "%s: got %.12g, want %.12g (tol %.2g)", what.c_str(),
                    value, expected, tol);
      failures.emplace_back(buf);
    }
  }
};

GreensMatrix greens_of(const Graph& g) { return greens_function(eigendecompose(g), g); }

// ------------------------------------------------------------------ 1
void criterion_path_exactness(Ctx& ctx) {
  const auto t0 = clock_type::now();
  const std::size_t sizes[] = {4, 10, 11, 40};
  const double expected[] = {5.0, 41.0, 50.0, 761.0};
  for (std::size_t i = 0; i < 4; ++i) {
    const Graph g = path_graph(sizes[i]);
    const auto gm = greens_of(g);
    const double spectral = dsd(gm, 0, sizes[i] - 1, 1.0);
    ctx.check_close(spectral, expected[i], 1e-8, "spectral DSD1 on P" + std::to_string(sizes[i]));
    ctx.check_close(cf::path_dsd1_exact(sizes[i]), expected[i], 0.0, "closed form");
  }
  const double elapsed = std::chrono::duration<double>(clock_type::now() - t0).count();
  ctx.check_le(elapsed, 1.0, "runtime (s)");
}

// ------------------------------------------------------------------ 2
void criterion_path_asymptotics(Ctx& ctx) {
  const auto t0 = clock_type::now();
  const std::size_t n = 500;
  const Graph g = path_graph(n);
  const auto gm = greens_of(g);
  const double exact = dsd(gm, 0, n - 1, 2.0);
  const double leading = cf::path_dsd_q_asymptotic(n, 2.0);
  const double ratio = exact / leading;
  ctx.check(ratio >= 0.95 && ratio <= 1.05,
            "DSD2(1,500)/leading = " + std::to_string(ratio) + " outside [0.95, 1.05]");
  const double elapsed = std::chrono::duration<double>(clock_type::now() - t0).count();
  ctx.check_le(elapsed, 30.0, "runtime (s)");
}

// ------------------------------------------------------------------ 3
void criterion_cycle_exactness(Ctx& ctx) {
  const Graph c4 = cycle_graph(4);
  const double expected_diff[] = {1.0, 0.0, -1.0, 0.0};
  const double sqrt2 = std::sqrt(2.0);

  const auto gm = greens_of(c4);
  for (std::size_t j = 0; j < 4; ++j)
    ctx.check_close(gm.G(0, j) - gm.G(2, j), expected_diff[j], 1e-10,
                    "spectral antipodal diff j=" + std::to_string(j));
  ctx.check_close(dsd(gm, 0, 2, 2.0), sqrt2, 1e-10, "spectral DSD2");

  const Matrix z = fundamental_matrix_inverse(c4);
  for (std::size_t j = 0; j < 4; ++j)
    ctx.check_close(z(0, j) - z(2, j), expected_diff[j], 1e-10,
                    "fundamental antipodal diff j=" + std::to_string(j));
  ctx.check_close(lq_diff_norm(z.row(0), z.row(2), 4, 2.0), sqrt2, 1e-10, "fundamental DSD2");

  // lazy walk at alpha* = 1/3, iterated to the stopping rule
  const double alpha = 1.0 / 3.0;
  const double rate = 1.0 / 3.0;
  WalkDiffIterator it(c4, 0, 2, alpha);
  while (it.k() < 100000 && it.increment_norm(2.0) >= 1e-6 * (1.0 - rate)) it.step();
  ctx.check_close(it.estimate(2.0), sqrt2, 1e-4, "walk DSD2 at tolerance");
  const auto walk_diff = it.scaled_sum();
  for (std::size_t j = 0; j < 4; ++j)
    ctx.check_close(walk_diff[j], expected_diff[j], 1e-4,
                    "walk antipodal diff j=" + std::to_string(j));

  for (std::size_t j = 1; j <= 4; ++j)
    ctx.check_close(cf::cycle_antipodal_diff(4, j), expected_diff[j - 1], 0.0,
                    "closed-form antipodal diff j=" + std::to_string(j));
}

// ------------------------------------------------------------------ 4
void criterion_hypercube_dichotomy(Ctx& ctx) {
  // frozen bands: q=2 values sit in [1, 3]; q=1 values grow at least like n
  for (unsigned n = 4; n <= 10; ++n) {
    const double v = cf::hypercube_dsd_q(n, 2.0);
    ctx.check(v >= 1.0 && v <= 3.0,
              "DSD2(Q" + std::to_string(n) + ") = " + std::to_string(v) + " outside [1, 3]");
  }
  for (unsigned n = 4; n <= 12; ++n) {
    const double v = cf::hypercube_dsd_q(n, 1.0) / static_cast<double>(n);
    ctx.check(v >= 1.0, "DSD1(Q" + std::to_string(n) + ")/n = " + std::to_string(v) + " < 1");
  }
  for (unsigned dim = 1; dim <= 6; ++dim) {
    const Graph g = hypercube_graph(dim);
    const auto gm = greens_of(g);
    const std::size_t last = g.size() - 1;
    for (double q : {1.0, 2.0})
      ctx.check_close(cf::hypercube_dsd_q(dim, q), dsd(gm, 0, last, q), 1e-8,
                      "closed vs spectral on Q" + std::to_string(dim));
  }
}

// ------------------------------------------------------------------ 5
void criterion_walk_convergence(Ctx& ctx) {
  struct Case {
    const char* name;
    Graph g;
  };
  const Case cases[] = {{"P6", path_graph(6)}, {"C5", cycle_graph(5)}, {"Q3", hypercube_graph(3)}};

  for (const auto& c : cases) {
    const auto sd = eigendecompose(c.g);
    const auto gm = greens_function(sd, c.g);
    const double lambda1 = sd.lambda1();
    const double lambda_max = sd.lambda_max();
    const double alpha_star = optimal_alpha(lambda1, lambda_max).alpha_star;

    const std::size_t pairs[][2] = {{0, 1}, {0, c.g.size() - 1}};
    for (double alpha : {0.2, 0.5, alpha_star}) {
      const double rate = convergence_rate(lambda1, lambda_max, alpha);
      for (const auto& pr : pairs) {
        for (double q : {1.0, 2.0}) {
          const double truth = dsd(gm, pr[0], pr[1], q);
          const double floor_ = 1e-12 * std::max(1.0, truth);
          WalkDiffIterator it(c.g, pr[0], pr[1], alpha);
          std::vector<double> err = {std::abs(it.estimate(q) - truth)};
          while (it.k() < 2000) {
            it.step();
            err.push_back(std::abs(it.estimate(q) - truth));
            if (err.back() < 0.1 * floor_ && it.k() >= 40) break;
          }
          bool reached = false;
          for (double e : err)
            if (e <= 1e-4 * truth) reached = true;
          const std::string tag = std::string(c.name) + " alpha=" + std::to_string(alpha) +
                                  " pair(" + std::to_string(pr[0]) + "," +
                                  std::to_string(pr[1]) + ") q=" + std::to_string(q);
          ctx.check(reached, tag + ": never reached 1e-4 relative error");

          // average per-step decay over parity-aligned 10-step windows,
          // from k=10 down to the noise floor
          std::size_t hi = 0;
          for (std::size_t k = 0; k < err.size(); k += 2)
            if (err[k] >= floor_) hi = k;
          const std::size_t lo = 10;
          if (hi >= lo + 10 && err[lo] > 0.0) {
            const double mean_ratio =
                std::pow(err[hi] / err[lo], 1.0 / static_cast<double>(hi - lo));
            ctx.check_le(mean_ratio, rate + 0.05, tag + ": mean per-step error ratio");
          }
        }
      }
    }
  }

  try {
    WalkParams p;
    p.alpha = 0.0;
    p.steps = 10;
    dsd_walk_estimate(path_graph(6), 0, 5, 1.0, p);
    ctx.check(false, "alpha = 0 on P6 was not rejected");
  } catch (const Error& e) {
    ctx.check(e.code() == errc::nonconvergent_walk, "P6 rejection carried the wrong code");
  }
}

// ------------------------------------------------------------------ 6
void criterion_alpha_optimality(Ctx& ctx) {
  struct Case {
    const char* name;
    Graph g;
  };
  const Case cases[] = {{"C4", cycle_graph(4)},
                        {"C6", cycle_graph(6)},
                        {"P5", path_graph(5)},
                        {"Q3", hypercube_graph(3)}};

  for (const auto& c : cases) {
    const auto sd = eigendecompose(c.g);
    const auto gm = greens_function(sd, c.g);
    const double lambda1 = sd.lambda1();
    const double lambda_max = sd.lambda_max();
    const double alpha_star = optimal_alpha(lambda1, lambda_max).alpha_star;

    const std::size_t u = 0, v = 1;  // adjacent: both extreme eigenmodes present
    const std::size_t n = c.g.size();
    std::vector<double> limit(n);
    for (std::size_t j = 0; j < n; ++j) limit[j] = gm.G(u, j) - gm.G(v, j);

    // measured constant: decay of the He-difference vector toward the
    // Green's limit over the latest even 10-step window above 1e-12
    auto measured = [&](double alpha) {
      WalkDiffIterator it(c.g, u, v, alpha);
      std::vector<double> err;
      for (std::size_t k = 0; k <= 400; ++k) {
        const auto s = it.scaled_sum();
        double e = 0.0;
        for (std::size_t j = 0; j < n; ++j) e += std::abs(s[j] - limit[j]);
        err.push_back(e);
        if (e < 1e-13 && k >= 30) break;
        it.step();
      }
      std::ptrdiff_t window_lo = -1;
      for (std::size_t k = 0; k + 10 < err.size(); k += 2)
        if (err[k] >= 1e-12 && err[k + 10] >= 1e-12) window_lo = static_cast<std::ptrdiff_t>(k);
      if (window_lo < 0) return 1.0;
      return std::pow(err[static_cast<std::size_t>(window_lo) + 10] /
                          err[static_cast<std::size_t>(window_lo)],
                      0.1);
    };

    int best_grid = 0, best_formula_grid = 0;
    double best = 2.0, best_formula = 2.0;
    for (int i = 1; i <= 99; ++i) {
      const double alpha = static_cast<double>(i) / 100.0;
      const double emp = measured(alpha);
      if (emp < best) {
        best = emp;
        best_grid = i;
      }
      const double formula = convergence_rate(lambda1, lambda_max, alpha);
      if (formula < best_formula) {
        best_formula = formula;
        best_formula_grid = i;
      }
    }

    int nearest = static_cast<int>(std::lround(alpha_star * 100.0));
    nearest = std::min(std::max(nearest, 1), 99);
    ctx.check(best_grid == nearest,
              std::string(c.name) + ": measured argmin 0." + std::to_string(best_grid) +
                  " != nearest-to-alpha* 0." + std::to_string(nearest));
    ctx.check(best_formula_grid == nearest,
              std::string(c.name) + ": formula argmin disagrees with nearest grid point");
  }
}

// ------------------------------------------------------------------ 7
void criterion_fundamental_equivalence(Ctx& ctx) {
  double worst = 0.0;
  for (std::uint64_t seed = 1000; seed < 1050; ++seed) {
    const Graph g = test::random_connected_graph(seed, 2, 64, seed % 2 == 0);
    const auto gm = greens_of(g);
    const Matrix z = fundamental_matrix_inverse(g);
    const std::size_t n = g.size();
    for (double q : {1.0, 2.0, kInf})
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
          const double a = lq_diff_norm(gm.G.row(u), gm.G.row(v), n, q);
          const double b = lq_diff_norm(z.row(u), z.row(v), n, q);
          worst = std::max(worst, std::abs(a - b));
        }
  }
  ctx.check_le(worst, 1e-7, "max |dsd - dsd_fundamental| over 50 graphs");
}

// ------------------------------------------------------------------ 8
void criterion_greens_identities(Ctx& ctx) {
  std::vector<std::pair<std::string, Graph>> roster;
  roster.emplace_back("K2", path_graph(2));
  roster.emplace_back("K3", cycle_graph(3));
  roster.emplace_back("P4", path_graph(4));
  roster.emplace_back("P6", path_graph(6));
  roster.emplace_back("P12", path_graph(12));
  roster.emplace_back("C4", cycle_graph(4));
  roster.emplace_back("C5", cycle_graph(5));
  roster.emplace_back("C6", cycle_graph(6));
  roster.emplace_back("Q2", hypercube_graph(2));
  roster.emplace_back("Q3", hypercube_graph(3));
  roster.emplace_back("Q4", hypercube_graph(4));
  for (std::uint64_t seed = 9000; seed < 9006; ++seed)
    roster.emplace_back("rand" + std::to_string(seed),
                        test::random_connected_graph(seed, 2, 64, seed % 2 == 0));

  for (const auto& [name, g] : roster) {
    const auto sd = eigendecompose(g);
    const auto gm = greens_function(sd, g);
    const auto res = verify_greens_identities(gm, g);
    ctx.check_le(res.g1, 1e-8, name + ": residual g1");
    ctx.check_le(res.g2, 1e-8, name + ": residual g2");
    ctx.check_le(res.conjugation, 1e-8, name + ": conjugation residual");

    if (g.size() <= 12) {
      const Matrix quad = test::heat_kernel_greens_quadrature(sd, 1e-4);
      ctx.check_le(max_abs_diff(quad, gm.G_normalized), 1e-4,
                   name + ": heat-kernel quadrature vs normalized Green's function");
    }
  }
}

// ------------------------------------------------------------------ 9
void criterion_random_concentration(Ctx& ctx) {
  const auto t0 = clock_type::now();

  auto run_instance = [&](const std::string& name, const Graph& g,
                          const ConcentrationModel& model) {
    const auto report = concentration_audit(g, model);
    ctx.check(report.connected, name + ": disconnected sample");
    ctx.check(report.epsilon_observed < 0.5,
              name + ": epsilon_obs = " + std::to_string(report.epsilon_observed) +
                  " outside the Lemma hypothesis");
    ctx.check(report.pass, name + ": concentration audit failed (obs " +
                               std::to_string(report.epsilon_observed) + " vs pred " +
                               std::to_string(report.epsilon_predicted) + " x1.5)");

    const auto gm = greens_of(g);
    const double eps = report.epsilon_observed;
    rng::Engine pair_rng(rng::mix(777));
    const std::size_t n = g.size();
    for (int s = 0; s < 200; ++s) {
      std::size_t u = pair_rng.next_below(static_cast<std::uint32_t>(n));
      std::size_t v = pair_rng.next_below(static_cast<std::uint32_t>(n));
      if (u == v) v = (v + 1) % n;
      const double value = dsd(gm, u, v, 2.0);
      const auto interval = dsd_concentration_bound(g, u, v, 2.0, eps);
      ctx.check(value >= interval.lower && value <= interval.upper,
                name + ": DSD2(" + std::to_string(u) + "," + std::to_string(v) + ") = " +
                    std::to_string(value) + " outside [" + std::to_string(interval.lower) +
                    ", " + std::to_string(interval.upper) + "]");
    }
  };

  // G(2000, 0.05), three fixed seeds; regenerate with a derived seed on the
  // vanishingly rare disconnected draw
  for (std::uint64_t seed : {101ull, 202ull, 303ull}) {
    std::uint64_t s = seed;
    Graph g = gnp(2000, 0.05, s);
    int attempts = 0;
    while (!is_connected(g) && attempts < 8) {
      s = rng::mix(s);
      std::fprintf(stderr, "note: G(2000,0.05) seed %llu disconnected, retrying with %llu\n",
                   static_cast<unsigned long long>(seed), static_cast<unsigned long long>(s));
      g = gnp(2000, 0.05, s);
      ++attempts;
    }
    run_instance("gnp seed " + std::to_string(seed), g, ConcentrationModel::for_gnp(0.05));
  }

  // Chung-Lu linear ramp w_i = 100 + 400 i/n
  const std::size_t n = 2000;
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i)
    weights[i] = 100.0 + 400.0 * static_cast<double>(i) / static_cast<double>(n);
  const WeightSequence w(weights);
  std::uint64_t s = 404;
  Graph g = chung_lu(w, s);
  int attempts = 0;
  while (!is_connected(g) && attempts < 8) {
    s = rng::mix(s);
    std::fprintf(stderr, "note: chung-lu sample disconnected, retrying with %llu\n",
                 static_cast<unsigned long long>(s));
    g = chung_lu(w, s);
    ++attempts;
  }
  run_instance("chung-lu ramp", g, ConcentrationModel::for_chung_lu(w.min_weight()));

  const double elapsed = std::chrono::duration<double>(clock_type::now() - t0).count();
  ctx.check_le(elapsed, 300.0, "runtime (s)");
}

// ------------------------------------------------------------------ 10
void criterion_monte_carlo(Ctx& ctx) {
  struct Case {
    const char* name;
    Graph g;
    double alpha;
    std::size_t steps;
  };
  const Case cases[] = {{"K2", path_graph(2), 0.5, 1}, {"C4", cycle_graph(4), 1.0 / 3.0, 12}};

  for (const auto& c : cases) {
    WalkParams exact_params;
    exact_params.alpha = c.alpha;
    exact_params.steps = c.steps;
    const auto exact = visit_expectations_exact(c.g, 0, exact_params);

    // 10 batches of 1e4 walks; the batch spread calibrates the standard error
    const std::size_t batches = 10, per_batch = 10000;
    std::vector<std::vector<double>> batch_means;
    for (std::size_t b = 0; b < batches; ++b) {
      WalkParams p = exact_params;
      p.num_walks = per_batch;
      p.seed = rng::derive_stream(4242, b);
      batch_means.push_back(monte_carlo_visits(c.g, 0, p).he);
    }
    for (std::size_t vtx = 0; vtx < c.g.size(); ++vtx) {
      double mean = 0.0;
      for (const auto& bm : batch_means) mean += bm[vtx];
      mean /= static_cast<double>(batches);
      double var = 0.0;
      for (const auto& bm : batch_means) var += (bm[vtx] - mean) * (bm[vtx] - mean);
      var /= static_cast<double>(batches - 1);
      const double se = std::sqrt(var / static_cast<double>(batches));
      const double gate = 5.0 * se + 1e-12;
      ctx.check(std::abs(mean - exact.he[vtx]) <= gate,
                std::string(c.name) + " vertex " + std::to_string(vtx) + ": |" +
                    std::to_string(mean) + " - " + std::to_string(exact.he[vtx]) +
                    "| beyond 5 standard errors (" + std::to_string(gate) + ")");
    }

    // bit-identical reruns
    WalkParams p = exact_params;
    p.num_walks = 100000;
    p.seed = 777;
    const auto a = monte_carlo_visits(c.g, 0, p);
    const auto b = monte_carlo_visits(c.g, 0, p);
    ctx.check(a.he == b.he, std::string(c.name) + ": rerun with the same seed differed");
  }
}

// ------------------------------------------------------------------ 11 (CLI)

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DSDKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool numbers_close(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Line/field CSV comparison: numeric fields within 1e-9, others exact.
bool csv_matches(const std::string& actual, const std::string& golden, std::string& why) {
  auto split_lines = [](const std::string& s) {
    std::vector<std::string> lines;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
  };
  const auto a_lines = split_lines(actual);
  const auto g_lines = split_lines(golden);
  if (a_lines.size() != g_lines.size()) {
    why = "line count " + std::to_string(a_lines.size()) + " vs " +
          std::to_string(g_lines.size());
    return false;
  }
  for (std::size_t i = 0; i < a_lines.size(); ++i) {
    std::stringstream sa(a_lines[i]), sg(g_lines[i]);
    std::string fa, fg;
    while (true) {
      const bool got_a = static_cast<bool>(std::getline(sa, fa, ','));
      const bool got_g = static_cast<bool>(std::getline(sg, fg, ','));
      if (got_a != got_g) {
        why = "field count differs on line " + std::to_string(i + 1);
        return false;
      }
      if (!got_a) break;
      char* end_a = nullptr;
      char* end_g = nullptr;
      const double va = std::strtod(fa.c_str(), &end_a);
      const double vg = std::strtod(fg.c_str(), &end_g);
      const bool num_a = end_a && *end_a == '\0' && !fa.empty();
      const bool num_g = end_g && *end_g == '\0' && !fg.empty();
      if (num_a && num_g) {
        if (!numbers_close(va, vg)) {
          why = "numeric field '" + fa + "' vs '" + fg + "' on line " + std::to_string(i + 1);
          return false;
        }
      } else if (fa != fg) {
        why = "field '" + fa + "' vs '" + fg + "' on line " + std::to_string(i + 1);
        return false;
      }
    }
  }
  return true;
}

bool json_approx_equal(const nlohmann::json& a, const nlohmann::json& b) {
  if (a.is_number() && b.is_number()) return numbers_close(a.get<double>(), b.get<double>());
  if (a.type() != b.type()) return false;
  if (a.is_object()) {
    if (a.size() != b.size()) return false;
    for (auto it = a.begin(); it != a.end(); ++it)
      if (!b.contains(it.key()) || !json_approx_equal(it.value(), b.at(it.key()))) return false;
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!json_approx_equal(a[i], b[i])) return false;
    return true;
  }
  return a == b;
}

void criterion_cli(Ctx& ctx) {
  namespace fs = std::filesystem;
  const fs::path golden_dir(DSDKIT_GOLDEN_DIR);
  const fs::path tmp = fs::path("acceptance_tmp");
  fs::create_directories(tmp);

  auto golden_csv_check = [&](const std::string& args, const std::string& golden_name) {
    const CliResult first = run_cli(args);
    ctx.check(first.exit_code == 0, args + ": exit " + std::to_string(first.exit_code));
    const CliResult second = run_cli(args);
    ctx.check(first.out == second.out, args + ": rerun was not byte-identical");
    const std::string golden = read_file(golden_dir / golden_name);
    ctx.check(!golden.empty(), golden_name + ": missing golden file");
    std::string why;
    if (!csv_matches(first.out, golden, why))
      ctx.check(false, golden_name + ": mismatch (" + why + ")");
  };

  // inputs
  const fs::path p4 = tmp / "p4.txt";
  std::ofstream(p4) << run_cli("gen path --n 4").out;
  const fs::path p10 = tmp / "p10.txt";
  std::ofstream(p10) << run_cli("gen path --n 10").out;
  const fs::path c4 = tmp / "c4.txt";
  std::ofstream(c4) << run_cli("gen cycle --n 4").out;
  const fs::path c5 = tmp / "c5.txt";
  std::ofstream(c5) << run_cli("gen cycle --n 5").out;
  const fs::path c6 = tmp / "c6.txt";
  std::ofstream(c6) << run_cli("gen cycle --n 6").out;
  const fs::path q3 = tmp / "q3.txt";
  std::ofstream(q3) << run_cli("gen hypercube --n 3").out;
  const fs::path k2 = tmp / "k2.txt";
  std::ofstream(k2) << run_cli("gen path --n 2").out;
  const fs::path weights = tmp / "weights.txt";
  std::ofstream(weights) << "4\n4\n4\n4\n4\n4\n";
  const fs::path disconnected = tmp / "disconnected.txt";
  std::ofstream(disconnected) << "0 1\n2 3\n";
  const fs::path badtoken = tmp / "badtoken.txt";
  std::ofstream(badtoken) << "0 x\n";
  const fs::path dupedge = tmp / "dupedge.txt";
  std::ofstream(dupedge) << "0 1\n1 0\n";
  const fs::path loop = tmp / "loop.txt";
  std::ofstream(loop) << "0 0\n";

  // gen goldens (integer output, must match verbatim through the csv matcher)
  golden_csv_check("gen path --n 6", "gen_path_n6.txt");
  golden_csv_check("gen gnp --n 12 --p 0.3 --seed 7", "gen_gnp_n12_p03_seed7.txt");
  golden_csv_check("gen chung-lu --weights-file " + (tmp / "weights.txt").string() + " --seed 5",
                   "gen_chunglu_w4x6_seed5.txt");

  // dsd
  golden_csv_check("dsd --input " + p4.string() + " --q 1", "dsd_p4_q1.csv");
  golden_csv_check("dsd --input " + p4.string() + " --q 1 --pairs 0:3 --one-based",
                   "dsd_p4_q1_pair_onebased.csv");
  {
    const CliResult res = run_cli("dsd --input " + p4.string() + " --q 1 --pairs 0:0");
    ctx.check(res.exit_code == 0, "dsd self pair exit code");
    ctx.check(res.out.find("0,0,0") != std::string::npos, "dsd self pair row missing");
  }
  {
    // the endpoint row carries the exact closed-form value
    const CliResult res = run_cli("dsd --input " + p4.string() + " --q 1 --pairs 0:3");
    std::stringstream ss(res.out);
    std::string header, row;
    std::getline(ss, header);
    std::getline(ss, row);
    const auto last_comma = row.rfind(',');
    ctx.check(last_comma != std::string::npos &&
                  numbers_close(std::stod(row.substr(last_comma + 1)), 5.0),
              "dsd endpoint row is not 5: " + row);
  }

  // hist
  golden_csv_check("hist --input " + c6.string() + " --q 1 --bins 3", "hist_c6_q1_b3.json");
  {
    const CliResult res = run_cli("hist --input " + p10.string() + " --q 1 --bins 50");
    ctx.check(res.exit_code == 0, "hist p10 exit code");
    const auto doc = nlohmann::json::parse(res.out, nullptr, false);
    ctx.check(!doc.is_discarded(), "hist p10 output is not JSON");
    if (!doc.is_discarded()) {
      std::uint64_t total = 0;
      for (const auto& c : doc["counts"]) total += c.get<std::uint64_t>();
      ctx.check(total == 45, "hist p10 total = " + std::to_string(total) + " != C(10,2)");
      const double last_edge = doc["bin_edges"].back().get<double>();
      ctx.check(numbers_close(last_edge, 41.0), "hist p10 max edge != 41");
      ctx.check(doc["counts"].size() == 50, "hist p10 bin count");
      const std::string golden = read_file(golden_dir / "hist_p10_q1_b50.json");
      ctx.check(json_approx_equal(doc, nlohmann::json::parse(golden, nullptr, false)),
                "hist p10 golden mismatch");
    }
  }
  {
    const CliResult res = run_cli("hist --input " + k2.string() + " --q 2 --bins 4");
    const auto doc = nlohmann::json::parse(res.out, nullptr, false);
    ctx.check(!doc.is_discarded() && doc["counts"].size() == 1 &&
                  doc["counts"][0].get<int>() == 1,
              "degenerate single-pair histogram");
  }

  // walk-compare
  golden_csv_check("walk-compare --input " + c4.string() + " --u 0 --v 2 --q 2 --alpha auto",
                   "walk_c4_auto_q2.csv");
  {
    const CliResult res =
        run_cli("walk-compare --input " + c4.string() + " --u 0 --v 2 --q 2 --alpha auto");
    std::stringstream ss(res.out);
    std::string header, first_row;
    std::getline(ss, header);
    std::getline(ss, first_row);
    std::stringstream fr(first_row);
    std::string field;
    std::getline(fr, field, ',');
    std::getline(fr, field, ',');
    ctx.check(numbers_close(std::stod(field), 1.0 / 3.0), "auto alpha on C4 is not 1/3");
    // converged: last data row's abs_error below 1e-4 * truth
    std::string last_data;
    std::string line;
    std::stringstream all(res.out);
    while (std::getline(all, line))
      if (!line.empty() && line[0] != '#' && line.find("k,") != 0) last_data = line;
    std::vector<double> fields;
    std::stringstream lr(last_data);
    while (std::getline(lr, field, ',')) fields.push_back(std::stod(field));
    ctx.check(fields.size() == 6 && fields[4] <= 1e-4 * fields[3],
              "walk-compare did not reach tolerance: " + last_data);
  }
  {
    const CliResult res =
        run_cli("walk-compare --input " + p4.string() + " --u 0 --v 3 --q 1 --alpha 0");
    ctx.check(res.exit_code == 4, "bipartite alpha=0 walk-compare exit code " +
                                      std::to_string(res.exit_code));
  }

  // verify
  {
    const CliResult res = run_cli("verify --input " + q3.string() + " --json " +
                                  (tmp / "verify_q3.json").string());
    ctx.check(res.exit_code == 0, "verify Q3 exit " + std::to_string(res.exit_code));
    ctx.check(res.out.find("verify: OK") != std::string::npos, "verify Q3 report");
    const auto doc =
        nlohmann::json::parse(read_file(tmp / "verify_q3.json"), nullptr, false);
    ctx.check(!doc.is_discarded() && doc["pass"].get<bool>(), "verify Q3 JSON report");
    const std::string golden = read_file(golden_dir / "verify_q3.txt");
    std::string why;
    ctx.check(csv_matches(res.out, golden, why), "verify Q3 golden mismatch: " + why);
  }
  {
    const CliResult res = run_cli("verify --input " + c5.string());
    ctx.check(res.exit_code == 0, "verify C5 exit " + std::to_string(res.exit_code));
  }
  {
    const CliResult res = run_cli("verify --input " + p4.string() + " --tol 1e-30");
    ctx.check(res.exit_code == 1, "verify with impossible tolerance should exit 1, got " +
                                      std::to_string(res.exit_code));
  }

  // oracle
  golden_csv_check("oracle --family path --n 10 --q 1", "oracle_path_n10_q1.csv");
  golden_csv_check("oracle --family cycle --n 4 --q 2", "oracle_cycle_n4_q2.csv");
  golden_csv_check("oracle --family hypercube --n 3 --q 1", "oracle_hypercube_n3_q1.csv");
  {
    const CliResult res = run_cli("oracle --family path --n 10 --q 1");
    ctx.check(res.out.find("41,50,0.8") != std::string::npos,
              "oracle path row lacks exact=41 leading=50");
  }

  // exit codes 2 and 3
  ctx.check(run_cli("dsd --input " + disconnected.string() + " --q 1").exit_code == 2,
            "disconnected input should exit 2");
  ctx.check(run_cli("dsd --input " + badtoken.string() + " --q 1").exit_code == 3,
            "parse failure should exit 3");
  ctx.check(run_cli("dsd --input " + dupedge.string() + " --q 1").exit_code == 3,
            "duplicate edge should exit 3");
  ctx.check(run_cli("hist --input " + loop.string() + " --q 1").exit_code == 3,
            "self-loop input should exit 3");
}

// ------------------------------------------------------------------ driver

struct Criterion {
  int id;
  const char* name;
  std::function<void(Ctx&)> fn;
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion criteria[] = {
      {1, "path exactness", criterion_path_exactness},
      {2, "path asymptotics", criterion_path_asymptotics},
      {3, "cycle exactness via three routes", criterion_cycle_exactness},
      {4, "hypercube dichotomy", criterion_hypercube_dichotomy},
      {5, "walk convergence to the spectral limit", criterion_walk_convergence},
      {6, "optimal-alpha grid search", criterion_alpha_optimality},
      {7, "fundamental-matrix equivalence", criterion_fundamental_equivalence},
      {8, "Green's identities and heat-kernel quadrature", criterion_greens_identities},
      {9, "random-graph concentration", criterion_random_concentration},
      {10, "Monte Carlo soundness", criterion_monte_carlo},
      {11, "CLI integration", criterion_cli},
  };

  std::string filter = argc > 1 ? argv[1] : "";
  int failures = 0;
  for (const auto& c : criteria) {
    if (!filter.empty()) {
      const std::string token = std::to_string(c.id);
      bool selected = false;
      std::stringstream ss(filter);
      std::string item;
      while (std::getline(ss, item, ','))
        if (item == token) selected = true;
      if (!selected) continue;
    }
    Ctx ctx;
    const auto t0 = clock_type::now();
    try {
      c.fn(ctx);
    } catch (const std::exception& e) {
      ctx.check(false, std::string("unexpected exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(clock_type::now() - t0).count();
    std::printf("ACCEPTANCE %2d %-45s %s (%.2f s)\n", c.id, c.name,
                ctx.failures.empty() ? "PASS" : "FAIL", elapsed);
    for (const auto& f : ctx.failures) {
      std::printf("    - %s\n", f.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures > 0) std::printf("%d check(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
