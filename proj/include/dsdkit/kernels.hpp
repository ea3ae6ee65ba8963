#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace dsdkit::kern {

// The data-parallel inner loops everything hot runs through: row dots for
// Green's function and heat-kernel assembly, fused vector updates for the
// Householder reduction and LU elimination, plane rotations for the QL
// sweep, and the L_q difference reductions for DSD norms.
//
// Each entry has a scalar reference implementation; the SIMD variants are
// selected once at runtime and must agree with the reference to rounding
// (tests/test_kernels.cpp drives the equivalence checks).
struct Ops {
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y[i] += f*a[i] + g*b[i]
  void (*axpy2)(double f, const double* a, double g, const double* b, double* y, std::size_t n);
  // (x[i], y[i]) <- (c*x[i] - s*y[i], s*x[i] + c*y[i])
  void (*rotate_pair)(double* x, double* y, double c, double s, std::size_t n);
  // sum_i |a[i] - b[i]|
  double (*sum_abs_diff)(const double* a, const double* b, std::size_t n);
  // sum_i (a[i] - b[i])^2
  double (*sum_sq_diff)(const double* a, const double* b, std::size_t n);
  // max_i |a[i] - b[i]|
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
};

// Reference implementation, always available.
const Ops& scalar_ops();

// Active backend. Chosen once: DSDKIT_SIMD=scalar|avx2|neon forces a
// backend (falling back to scalar if the machine lacks it), otherwise the
// best supported one is used.
const Ops& ops();

const char* backend_name();

// Every backend compiled in and usable on this machine, for equivalence tests.
std::vector<std::pair<const char*, const Ops*>> available_backends();

}  // namespace dsdkit::kern
