#pragma once

#include <cstddef>

namespace dsdkit::closed_form {

// Exact analytic values for paths, cycles, and hypercubes, used both as
// fast paths and as ground truth for the spectral engine. These functions
// take the 1-based vertex labels of the classical formulas; the 0-based
// shift happens here and nowhere else.

// Green's function entry of P_n (n >= 2, 1 <= u,v <= n).
double path_greens(std::size_t n, std::size_t u, std::size_t v);

// DSD_1(1, n) on P_n: 2k^2-2k+1 for n = 2k, 2k^2 for n = 2k+1.
double path_dsd1_exact(std::size_t n);

// Leading term (1+q)^{-1/q} n^{1+1/q}; q = infinity degrades to n.
double path_dsd_q_asymptotic(std::size_t n, double q);

// Green's function entry of C_n (n >= 3), depending only on the cyclic
// distance between x and y.
double cycle_greens(std::size_t n, std::size_t x, std::size_t y);

// G(1, j) - G(1+k, j) = k/2 - |j-1|_c for even n = 2k. Odd n is rejected
// (route odd cycles through cycle_greens).
double cycle_antipodal_diff(std::size_t n, std::size_t j);

// Leading term (4/(1+q))^{1/q} (n/4)^{1+1/q}; q = infinity degrades to n/4.
double cycle_dsd_q_asymptotic(std::size_t n, double q);

// Signed sum S(a, b) of the binomial tail ratios c_j for Q_n, with the
// empty range S(b+1, b) = 0 and the antisymmetric continuation
// S(a, b) = -S(b+1, a-1) for a > b+1. Exposed for tests.
double hypercube_tail_ratio_sum(unsigned n, long a, long b);

// G(0, x) - G(1, x) on Q_n for a vertex x at Hamming distance k from 0.
// Exact rational arithmetic internally; n is capped at 60.
double hypercube_antipodal_diff(unsigned n, unsigned k);

// Antipodal DSD_q on Q_n summed over Hamming shells.
double hypercube_dsd_q(unsigned n, double q);

}  // namespace dsdkit::closed_form
