#include "core/types.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace symk {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double scale = std::max(max_abs(a), max_abs(b));
  if (scale == 0.0) return true;
  return max_abs(a - b) <= tol * scale;
}

bool commutes(const Matrix& a, const Matrix& b, double tol) {
  const Matrix ab = a * b;
  const Matrix ba = b * a;
  const double scale = std::max(max_abs(ab), max_abs(ba));
  if (scale == 0.0) return true;
  return max_abs(ab - ba) <= tol * scale;
}

std::vector<double> cluster_values(const std::vector<double>& values, double tol) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return values[i] < values[j]; });
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double gap = tol * std::max(1.0, scale) * static_cast<double>(values.size());
  std::vector<double> reps(values.size());
  size_t start = 0;
  while (start < order.size()) {
    size_t end = start + 1;
    while (end < order.size() && values[order[end]] - values[order[end - 1]] <= gap) ++end;
    double mean = 0.0;
    for (size_t k = start; k < end; ++k) mean += values[order[k]];
    mean /= static_cast<double>(end - start);
    for (size_t k = start; k < end; ++k) reps[order[k]] = mean;
    start = end;
  }
  return reps;
}

}  // namespace symk
