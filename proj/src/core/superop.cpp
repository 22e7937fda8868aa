#include "core/superop.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

#include <Eigen/Eigenvalues>

#include "core/svd.hpp"

namespace symk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Matrix kron_matrix(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

Matrix gather(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix out(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

// System matrices restricted to one charge sector.
struct RestrictedSystem {
  Matrix h;
  std::vector<Matrix> jump;      // L restricted
  std::vector<Matrix> jump_sq;   // L^dag L restricted
  std::vector<double> gamma;
};

RestrictedSystem restrict_system(const OpenSystem& sys, const std::vector<int>& idx) {
  RestrictedSystem r;
  r.h = gather(sys.hamiltonian.entries, idx, idx);
  for (const auto& [l, gamma] : sys.jumps) {
    r.jump.push_back(gather(l.entries, idx, idx));
    Matrix k = l.entries.adjoint() * l.entries;
    r.jump_sq.push_back(gather(k, idx, idx));
    r.gamma.push_back(gamma);
  }
  return r;
}

// Generator block between the row sector `a` and column sector `b`, acting on
// row-major vectorized operators supported there.
Matrix generator_block(const RestrictedSystem& a, const RestrictedSystem& b) {
  const Eigen::Index na = a.h.rows();
  const Eigen::Index nb = b.h.rows();
  const Matrix ia = Matrix::Identity(na, na);
  const Matrix ib = Matrix::Identity(nb, nb);
  Matrix m = -kI * (kron_matrix(a.h, ib) - kron_matrix(ia, b.h.transpose()));
  for (size_t l = 0; l < a.jump.size(); ++l) {
    const double g = a.gamma[l];
    m += g * (2.0 * kron_matrix(a.jump[l], b.jump[l].conjugate()) -
              kron_matrix(a.jump_sq[l], ib) - kron_matrix(ia, b.jump_sq[l].transpose()));
  }
  return m;
}

void require_hermitian_h(const OpenSystem& sys, double tol) {
  if (!is_hermitian(sys.hamiltonian, tol))
    throw std::invalid_argument("Hamiltonian is not Hermitian within tolerance");
}

struct SectorIndex {
  std::vector<std::vector<double>> labels;   // sorted ascending
  std::vector<std::vector<int>> indices;     // Hilbert indices per sector
};

SectorIndex split_basis(const OpenSystem& sys, const std::vector<Operator>& charges,
                        double tol) {
  const int d = sys.hamiltonian.dim();
  for (const auto& c : charges) {
    if (!same_space(c.space, sys.hamiltonian.space))
      throw std::invalid_argument("charge operator lives on a different space");
    if (!is_hermitian(c, tol)) throw std::invalid_argument("charge operators must be Hermitian");
    Matrix off = c.entries;
    off.diagonal().setZero();
    if (max_abs(off) > tol * std::max(1.0, max_abs(c.entries)))
      throw std::invalid_argument(
          "charge operator is not diagonal in the computational basis; "
          "rotate with simultaneous_eigenbasis first");
    if (!is_strong_symmetry(sys, c, std::max(tol, kDefaultSymmetryTol)))
      throw std::invalid_argument("charge operator fails the strong-symmetry test");
  }
  for (size_t i = 0; i < charges.size(); ++i)
    for (size_t j = i + 1; j < charges.size(); ++j)
      if (!commutes(charges[i].entries, charges[j].entries, tol))
        throw std::invalid_argument("charge operators must commute");

  std::vector<std::vector<double>> key(d);
  for (const auto& c : charges) {
    std::vector<double> diag(d);
    for (int i = 0; i < d; ++i) diag[i] = c.entries(i, i).real();
    const std::vector<double> reps = cluster_values(diag, tol);
    for (int i = 0; i < d; ++i) key[i].push_back(reps[i]);
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return key[i] < key[j]; });
  SectorIndex out;
  for (int i : order) {
    if (out.labels.empty() || key[i] != out.labels.back()) {
      out.labels.push_back(key[i]);
      out.indices.emplace_back();
    }
    out.indices.back().push_back(i);
  }
  return out;
}

int sector_thread_count(size_t num_jobs) {
  int n = 1;
  if (const char* env = std::getenv("SYMMKERNEL_THREADS")) {
    n = std::atoi(env);
    if (n < 1) n = 1;
    if (n > 256) n = 256;
  }
  return static_cast<int>(std::min<size_t>(n, std::max<size_t>(num_jobs, 1)));
}

}  // namespace

OpenSystem make_open_system(Operator hamiltonian,
                            std::vector<std::pair<Operator, double>> jumps,
                            double tol) {
  for (const auto& [l, gamma] : jumps) {
    if (!same_space(l.space, hamiltonian.space))
      throw std::invalid_argument("jump operator lives on a different space");
    if (!(gamma >= 0.0)) throw std::invalid_argument("jump rates must be nonnegative");
  }
  OpenSystem sys{std::move(hamiltonian), std::move(jumps)};
  require_hermitian_h(sys, tol);
  return sys;
}

Vector vectorize(const Matrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("vectorize expects a square matrix");
  const Eigen::Index d = rho.rows();
  Vector v(d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) v(i * d + j) = rho(i, j);
  return v;
}

Matrix devectorize(const Vector& v) {
  const auto n = v.size();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) throw std::invalid_argument("devectorize: length is not a perfect square");
  Matrix rho(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) rho(i, j) = v(i * d + j);
  return rho;
}

SuperOperator liouvillian(const OpenSystem& sys, double tol) {
  require_hermitian_h(sys, tol);
  const int d = sys.hamiltonian.dim();
  std::vector<int> all(d);
  std::iota(all.begin(), all.end(), 0);
  const RestrictedSystem whole = restrict_system(sys, all);
  return SuperOperator{d, generator_block(whole, whole)};
}

SuperOperator adjoint_liouvillian(const OpenSystem& sys, double tol) {
  require_hermitian_h(sys, tol);
  const int d = sys.hamiltonian.dim();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix& h = sys.hamiltonian.entries;
  Matrix m = kI * (kron_matrix(h, id) - kron_matrix(id, h.transpose()));
  for (const auto& [l, gamma] : sys.jumps) {
    const Matrix ldag = l.entries.adjoint();
    const Matrix sq = ldag * l.entries;
    m += gamma * (2.0 * kron_matrix(ldag, l.entries.transpose()) -
                  kron_matrix(sq, id) - kron_matrix(id, sq.transpose()));
  }
  return SuperOperator{d, std::move(m)};
}

bool is_strong_symmetry(const OpenSystem& sys, const Operator& s, double tol) {
  if (!same_space(s.space, sys.hamiltonian.space))
    throw std::invalid_argument("symmetry candidate lives on a different space");
  if (!commutes(sys.hamiltonian.entries, s.entries, tol)) return false;
  for (const auto& [l, gamma] : sys.jumps) {
    (void)gamma;
    if (!commutes(l.entries, s.entries, tol)) return false;
    if (!commutes(l.entries.adjoint(), s.entries, tol)) return false;
  }
  return true;
}

KernelResult kernel_nullity(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("kernel_nullity expects a square matrix");
  KernelResult out;
  const RealVector sv = singular_values(m);
  const Eigen::Index n = sv.size();
  const double smax = n > 0 ? sv(0) : 0.0;
  const double thresh = tol * smax * static_cast<double>(m.rows());
  for (Eigen::Index i = n - 1; i >= 0; --i) {  // ascending
    if (smax == 0.0 || sv(i) < thresh)
      out.dropped_singulars.push_back(sv(i));
    else
      out.kept_singulars.push_back(sv(i));
  }
  out.nullity = static_cast<std::int64_t>(out.dropped_singulars.size());
  std::sort(out.dropped_singulars.begin(), out.dropped_singulars.end());
  std::sort(out.kept_singulars.begin(), out.kept_singulars.end());
  if (out.kept_singulars.empty() || out.dropped_singulars.empty() ||
      out.dropped_singulars.back() == 0.0) {
    out.gap_ratio = kInf;
  } else {
    out.gap_ratio = out.kept_singulars.front() / out.dropped_singulars.back();
  }
  out.uncertain = out.gap_ratio < kMinGapRatio;
  return out;
}

std::vector<SectorBlock> sector_split(const OpenSystem& sys,
                                      const std::vector<Operator>& charges,
                                      double tol) {
  require_hermitian_h(sys, kDefaultCompareTol);
  const SectorIndex sectors = split_basis(sys, charges, tol);
  std::vector<RestrictedSystem> restricted;
  restricted.reserve(sectors.indices.size());
  for (const auto& idx : sectors.indices) restricted.push_back(restrict_system(sys, idx));

  std::vector<SectorBlock> blocks;
  for (size_t a = 0; a < sectors.indices.size(); ++a)
    for (size_t b = 0; b < sectors.indices.size(); ++b) {
      SectorBlock blk;
      blk.alpha_label = sectors.labels[a];
      blk.beta_label = sectors.labels[b];
      blk.row_indices = sectors.indices[a];
      blk.col_indices = sectors.indices[b];
      blk.block = generator_block(restricted[a], restricted[b]);
      blocks.push_back(std::move(blk));
    }
  return blocks;
}

DegeneracyOutcome degeneracy(const OpenSystem& sys,
                             const std::vector<Operator>& charges,
                             double tol) {
  require_hermitian_h(sys, kDefaultCompareTol);
  DegeneracyOutcome out;
  out.min_gap_ratio = kInf;

  if (charges.empty()) {
    const int d = sys.hamiltonian.dim();
    if (static_cast<long long>(d) * d > 4096)
      throw BudgetError("dense path limited to d^2 <= 4096; supply charge operators");
    const SuperOperator sop = liouvillian(sys);
    KernelResult k = kernel_nullity(sop.matrix, tol);
    out.nullity = k.nullity;
    out.min_gap_ratio = k.gap_ratio;
    out.uncertain = k.uncertain;
    out.sectors.push_back(SectorNullity{{}, {}, static_cast<int>(sop.matrix.rows()),
                                        k.nullity, k.gap_ratio, k.uncertain});
    return out;
  }

  const SectorIndex sectors = split_basis(sys, charges, tol);
  const size_t ns = sectors.indices.size();
  std::vector<RestrictedSystem> restricted;
  restricted.reserve(ns);
  for (const auto& idx : sectors.indices) restricted.push_back(restrict_system(sys, idx));

  std::vector<SectorNullity> results(ns * ns);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t job = next.fetch_add(1);
      if (job >= ns * ns) return;
      const size_t a = job / ns;
      const size_t b = job % ns;
      const Matrix block = generator_block(restricted[a], restricted[b]);
      const KernelResult k = kernel_nullity(block, tol);
      results[job] = SectorNullity{sectors.labels[a], sectors.labels[b],
                                   static_cast<int>(block.rows()), k.nullity,
                                   k.gap_ratio, k.uncertain};
    }
  };
  const int nthreads = sector_thread_count(ns * ns);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& r : results) {
    out.nullity += r.nullity;
    out.min_gap_ratio = std::min(out.min_gap_ratio, r.gap_ratio);
    out.uncertain = out.uncertain || r.uncertain;
  }
  out.sectors = std::move(results);
  return out;
}

Operator evolve(const OpenSystem& sys, const Operator& rho0, double total_time, double dt) {
  if (!same_space(rho0.space, sys.hamiltonian.space))
    throw std::invalid_argument("evolve: state lives on a different space");
  if (!(total_time >= 0.0) || !(dt > 0.0))
    throw std::invalid_argument("evolve: need total_time >= 0 and dt > 0");
  const int d = rho0.dim();
  if (static_cast<long long>(d) * d > 4096)
    throw BudgetError("evolve limited to d <= 64");

  if (!is_hermitian(rho0, 1e-8)) throw std::invalid_argument("evolve: rho0 is not Hermitian");
  if (std::abs(rho0.entries.trace().real() - 1.0) > 1e-9 ||
      std::abs(rho0.entries.trace().imag()) > 1e-9)
    throw std::invalid_argument("evolve: rho0 does not have unit trace");
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho0.entries + rho0.entries.adjoint()));
    if (es.eigenvalues().minCoeff() < -1e-8)
      throw std::invalid_argument("evolve: rho0 is not positive semidefinite");
  }

  const Matrix m = liouvillian(sys).matrix;
  const long long steps = std::max<long long>(1, static_cast<long long>(std::ceil(total_time / dt - 1e-12)));
  const double h = total_time / static_cast<double>(steps);
  Vector v = vectorize(rho0.entries);
  if (total_time > 0.0) {
    for (long long s = 0; s < steps; ++s) {
      const Vector k1 = m * v;
      const Vector k2 = m * (v + 0.5 * h * k1);
      const Vector k3 = m * (v + 0.5 * h * k2);
      const Vector k4 = m * (v + h * k3);
      v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      Complex tr = 0.0;
      for (int i = 0; i < d; ++i) tr += v(static_cast<Eigen::Index>(i) * d + i);
      if (std::abs(tr - Complex(1.0, 0.0)) > 1e-6)
        throw NumericalError("evolve: trace drift detected; reduce dt");
    }
  }
  Matrix rho = devectorize(v);
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-9)
    throw NumericalError("evolve: final trace deviates beyond 1e-9; reduce dt");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()));
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw NumericalError("evolve: final state lost positivity; reduce dt");
  return Operator{rho0.space, std::move(rho)};
}

}  // namespace symk
