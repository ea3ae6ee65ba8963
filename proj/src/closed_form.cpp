#include "dsdkit/closed_form.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <vector>

#include "dsdkit/error.hpp"

namespace dsdkit::closed_form {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr unsigned kMaxHypercubeDim = 60;

void check_path_label(std::size_t n, std::size_t v) {
  if (v < 1 || v > n) fail(errc::invalid_vertex, "label " + std::to_string(v) + " outside 1.." +
                                                     std::to_string(n));
}

std::size_t cyclic_distance(std::size_t n, std::size_t x, std::size_t y) {
  const std::size_t d = x > y ? x - y : y - x;
  return std::min(d, n - d);
}

// Row n of Pascal's triangle; entries fit uint64 for n <= 60.
std::vector<std::uint64_t> binomial_row(unsigned n) {
  std::vector<std::uint64_t> row(n + 1, 1);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i; j-- > 1;) row[j] += row[j - 1];
  return row;
}

}  // namespace

double path_greens(std::size_t n, std::size_t u, std::size_t v) {
  if (n < 2) fail(errc::degenerate_graph, "path needs n >= 2");
  check_path_label(n, u);
  check_path_label(n, v);
  // The d_v weight belongs to the second argument even in the u > v
  // branch, where the quadratic part swaps its roles.
  const double dv = (v == 1 || v == n) ? 1.0 : 2.0;
  std::size_t lo = u, hi = v;
  if (lo > hi) std::swap(lo, hi);
  const double nn = static_cast<double>(n);
  const double c = (2.0 * nn * nn - 4.0 * nn + 3.0) / 6.0;
  const double a = static_cast<double>(lo) - 1.0;
  const double b = nn - static_cast<double>(hi);
  return dv / (2.0 * (nn - 1.0)) * (a * a + b * b - c);
}

double path_dsd1_exact(std::size_t n) {
  if (n < 2) fail(errc::degenerate_graph, "path needs n >= 2");
  const double k = static_cast<double>(n / 2);
  if (n % 2 == 0) return 2.0 * k * k - 2.0 * k + 1.0;
  return 2.0 * k * k;
}

double path_dsd_q_asymptotic(std::size_t n, double q) {
  if (std::isnan(q) || q < 1.0) fail(errc::invalid_parameter, "q must satisfy q >= 1");
  const double nn = static_cast<double>(n);
  if (std::isinf(q)) return nn;
  return std::pow(1.0 + q, -1.0 / q) * std::pow(nn, 1.0 + 1.0 / q);
}

double cycle_greens(std::size_t n, std::size_t x, std::size_t y) {
  if (n < 3) fail(errc::degenerate_graph, "cycle needs n >= 3");
  check_path_label(n, x);
  check_path_label(n, y);
  const double i = static_cast<double>(cyclic_distance(n, x, y));
  if (n % 2 == 0) {
    const double k = static_cast<double>(n / 2);
    return (k - i) * (k - i) / (2.0 * k) - k / 6.0 - 1.0 / (12.0 * k);
  }
  const double k = static_cast<double>(n / 2);
  const double m = k + 1.0 - i;  // binomial C(m, 2); zero when m < 2
  const double choose2 = m >= 2.0 ? m * (m - 1.0) / 2.0 : 0.0;
  return 2.0 / (2.0 * k + 1.0) * choose2 - (k * k + k) / (3.0 * (2.0 * k + 1.0));
}

double cycle_antipodal_diff(std::size_t n, std::size_t j) {
  if (n < 3 || n % 2 != 0)
    fail(errc::invalid_parameter, "antipodal difference needs an even cycle");
  check_path_label(n, j);
  const double k = static_cast<double>(n / 2);
  const double i = static_cast<double>(cyclic_distance(n, j, 1));
  return k / 2.0 - i;
}

double cycle_dsd_q_asymptotic(std::size_t n, double q) {
  if (std::isnan(q) || q < 1.0) fail(errc::invalid_parameter, "q must satisfy q >= 1");
  const double quarter = static_cast<double>(n) / 4.0;
  if (std::isinf(q)) return quarter;
  return std::pow(4.0 / (1.0 + q), 1.0 / q) * std::pow(quarter, 1.0 + 1.0 / q);
}

double hypercube_tail_ratio_sum(unsigned n, long a, long b) {
  if (n < 1) fail(errc::degenerate_graph, "hypercube needs n >= 1");
  if (n > kMaxHypercubeDim)
    fail(errc::size_limit, "hypercube closed forms capped at n = " +
                               std::to_string(kMaxHypercubeDim));

  double sign = 1.0;
  if (a == b + 1) return 0.0;
  if (a > b + 1) {
    // Antisymmetric continuation; the literal reversed-sum convention
    // would break the G(0,x)-G(1,x) symmetry at the middle shell.
    const long new_a = b + 1, new_b = a - 1;
    a = new_a;
    b = new_b;
    sign = -1.0;
  }
  if (a < 0 || b >= static_cast<long>(n))
    fail(errc::invalid_parameter, "ratio sum range outside 0..n-1");

  const std::vector<std::uint64_t> row_n = binomial_row(n);
  const std::vector<std::uint64_t> row_n1 = binomial_row(n - 1);

  // tail[j] = C(n, j+1) + ... + C(n, n), exact in 64 bits for n <= 60.
  std::vector<std::uint64_t> tail(n, 0);
  std::uint64_t acc = 0;
  for (long j = static_cast<long>(n) - 1; j >= 0; --j) {
    acc += row_n[static_cast<std::size_t>(j) + 1];
    tail[static_cast<std::size_t>(j)] = acc;
  }

  cpp_rational sum = 0;
  for (long j = a; j <= b; ++j)
    sum += cpp_rational(cpp_int(tail[static_cast<std::size_t>(j)]),
                        cpp_int(row_n1[static_cast<std::size_t>(j)]));
  return sign * sum.convert_to<double>();
}

double hypercube_antipodal_diff(unsigned n, unsigned k) {
  if (k > n) fail(errc::invalid_parameter, "shell index outside 0..n");
  const double s =
      hypercube_tail_ratio_sum(n, static_cast<long>(k), static_cast<long>(n) - k - 1);
  return std::ldexp(s, -static_cast<int>(n));
}

double hypercube_dsd_q(unsigned n, double q) {
  if (std::isnan(q) || q < 1.0) fail(errc::invalid_parameter, "q must satisfy q >= 1");
  if (n < 1) fail(errc::degenerate_graph, "hypercube needs n >= 1");
  if (n > kMaxHypercubeDim)
    fail(errc::size_limit, "hypercube closed forms capped at n = " +
                               std::to_string(kMaxHypercubeDim));

  std::vector<double> diffs(n + 1);
  double peak = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    diffs[k] = std::abs(hypercube_antipodal_diff(n, k));
    peak = std::max(peak, diffs[k]);
  }
  if (std::isinf(q)) return peak;

  const std::vector<std::uint64_t> row = binomial_row(n);
  double acc = 0.0;
  for (unsigned k = 0; k <= n; ++k)
    if (diffs[k] > 0.0) acc += static_cast<double>(row[k]) * std::pow(diffs[k] / peak, q);
  return peak * std::pow(acc, 1.0 / q);
}

}  // namespace dsdkit::closed_form
