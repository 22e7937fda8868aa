#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace symk {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Repo-wide tolerance policy: rank decisions scale `tol` by the largest
// singular value and the matrix side; entrywise comparisons scale by the
// max-magnitude entry.
inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kDefaultSymmetryTol = 1e-10;
inline constexpr double kDefaultCompareTol = 1e-10;
inline constexpr double kMinGapRatio = 1e3;

// Requested computation exceeds the documented size budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical procedure failed or produced an untrustworthy result.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double max_abs(const Matrix& m);

// |a - b| <= tol * max(max|a|, max|b|), entrywise.
bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultCompareTol);

// max|AB - BA| <= tol * max(max|AB|, max|BA|).
bool commutes(const Matrix& a, const Matrix& b, double tol = kDefaultSymmetryTol);

// Groups nearly-equal values; returns the cluster representative (mean) for
// each input position. Values within tol * max(1, scale) * count of their
// sorted neighbour share a cluster.
std::vector<double> cluster_values(const std::vector<double>& values, double tol);

}  // namespace symk
