#pragma once

#include "core/types.hpp"

namespace symk {

// Singular values in descending order.
RealVector singular_values(Matrix a);

struct FullSvd {
  RealVector sv;  // descending
  Matrix u;       // left singular vectors as columns
  Matrix v;       // right singular vectors as columns (not the adjoint)
};

FullSvd svd_full(Matrix a);

// Numerical rank under the repo tolerance policy: singular values below
// tol * sv_max * max(rows, cols) count as zero.
int rank_with_tolerance(const RealVector& sv, double tol, long long max_dim);

}  // namespace symk
