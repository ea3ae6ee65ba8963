#pragma once

#include <span>
#include <vector>

#include "dsdkit/matrix.hpp"

namespace dsdkit {

// LU factorization with partial pivoting (in place, P*A = L*U).
struct LuDecomposition {
  Matrix lu;
  std::vector<int> perm;
};

// Throws errc::numerical_singularity on a (numerically) singular pivot.
LuDecomposition lu_factor(Matrix a);

std::vector<double> lu_solve(const LuDecomposition& f, std::span<const double> b);

Matrix lu_inverse(const LuDecomposition& f);

Matrix invert(const Matrix& a);

}  // namespace dsdkit
