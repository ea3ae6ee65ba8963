#pragma once

#include <vector>

#include "dsdkit/matrix.hpp"

namespace dsdkit {

struct SymEigenResult {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j = unit eigenvector for values[j]; empty if skipped
};

// Dense symmetric eigensolver: Householder tridiagonalization followed by
// implicit-shift QL with accumulated rotations (the classical tred2/tql2
// pair). The accumulation runs in a transposed layout so every inner loop
// walks contiguous rows through the SIMD kernels. Eigenvector signs are
// fixed (largest-magnitude entry positive), so results are deterministic
// for a given input and kernel backend.
//
// Throws errc::eigensolver_failure if the QL iteration stalls.
SymEigenResult sym_eigen(const Matrix& a, bool want_vectors = true);

}  // namespace dsdkit
