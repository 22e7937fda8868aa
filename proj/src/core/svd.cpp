#include "core/svd.hpp"

#include <algorithm>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace symk {

namespace {

using LapackComplex = std::complex<double>;

LapackComplex* data_of(Matrix& m) { return reinterpret_cast<LapackComplex*>(m.data()); }

}  // namespace

RealVector singular_values(Matrix a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  RealVector sv(std::min(m, n));
  if (sv.size() == 0) return sv;
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, data_of(a), m,
                                   sv.data(), nullptr, 1, nullptr, 1);
  if (info != 0) {
    // zgesdd occasionally fails to converge; zgesvd is slower but sturdier.
    RealVector superb(std::max<lapack_int>(1, std::min(m, n) - 1));
    info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'N', m, n, data_of(a), m,
                          sv.data(), nullptr, 1, nullptr, 1, superb.data());
    if (info != 0) throw NumericalError("SVD failed to converge");
  }
  return sv;
}

FullSvd svd_full(Matrix a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  FullSvd out;
  out.sv.resize(std::min(m, n));
  out.u.resize(m, m);
  Matrix vt(n, n);
  if (m == 0 || n == 0) {
    out.v = vt;
    return out;
  }
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'A', m, n, data_of(a), m,
                                   out.sv.data(), data_of(out.u), m, data_of(vt), n);
  if (info != 0) {
    RealVector superb(std::max<lapack_int>(1, std::min(m, n) - 1));
    info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'A', 'A', m, n, data_of(a), m,
                          out.sv.data(), data_of(out.u), m, data_of(vt), n, superb.data());
    if (info != 0) throw NumericalError("SVD failed to converge");
  }
  out.v = vt.adjoint();
  return out;
}

int rank_with_tolerance(const RealVector& sv, double tol, long long max_dim) {
  if (sv.size() == 0) return 0;
  const double smax = sv(0);
  if (smax == 0.0) return 0;
  const double thresh = tol * smax * static_cast<double>(max_dim);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) >= thresh) ++rank;
  return rank;
}

}  // namespace symk
