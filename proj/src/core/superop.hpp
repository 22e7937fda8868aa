#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/operators.hpp"

namespace symk {

// Hamiltonian plus weighted jump operators; the central input object.
struct OpenSystem {
  Operator hamiltonian;
  std::vector<std::pair<Operator, double>> jumps;  // (L, gamma), gamma >= 0
};

// Validates shared space, rates, and Hamiltonian hermiticity.
OpenSystem make_open_system(Operator hamiltonian,
                            std::vector<std::pair<Operator, double>> jumps,
                            double tol = kDefaultCompareTol);

// d^2 x d^2 matrix acting on row-major vectorized density matrices.
struct SuperOperator {
  int space_dim = 0;  // underlying Hilbert dimension d
  Matrix matrix;
};

// Row-major stacking: component i*d+j is rho(i, j).
Vector vectorize(const Matrix& rho);
Matrix devectorize(const Vector& v);  // length must be a perfect square

// Generator of rho' = -i[H,rho] + sum_l gamma_l (2 L rho L^dag - {L^dag L, rho}).
SuperOperator liouvillian(const OpenSystem& sys, double tol = kDefaultCompareTol);

// Heisenberg-picture generator O' = +i[H,O] + sum_l gamma_l (2 L^dag O L -
// {L^dag L, O}); equals the Hilbert-Schmidt adjoint (conjugate transpose)
// of liouvillian().
SuperOperator adjoint_liouvillian(const OpenSystem& sys, double tol = kDefaultCompareTol);

// True iff S commutes with H, every L and every L^dag within tol
// (relative to the product magnitudes).
bool is_strong_symmetry(const OpenSystem& sys, const Operator& s, double tol);

struct KernelResult {
  std::int64_t nullity = 0;
  std::vector<double> kept_singulars;     // ascending
  std::vector<double> dropped_singulars;  // ascending
  double gap_ratio = 0.0;                 // min(kept)/max(dropped); +inf when unambiguous
  bool uncertain = false;                 // gap_ratio below kMinGapRatio
};

// Kernel dimension of M from its singular spectrum: sigma counts as zero
// iff sigma < tol * sigma_max * n (n = matrix side).
KernelResult kernel_nullity(const Matrix& m, double tol = kDefaultRankTol);

// One invariant block of the generator between two charge sectors.
struct SectorBlock {
  std::vector<double> alpha_label;  // joint charge eigenvalues (row sector)
  std::vector<double> beta_label;   // joint charge eigenvalues (column sector)
  std::vector<int> row_indices;     // Hilbert basis indices of the row sector
  std::vector<int> col_indices;     // Hilbert basis indices of the column sector
  Matrix block;                     // square, side |alpha|*|beta|
};

// Splits the generator along the joint eigenspaces of diagonal, commuting,
// strongly-symmetric charges. One block per ordered sector pair, sectors
// sorted by charge tuple. No charges: a single block holding the full matrix.
std::vector<SectorBlock> sector_split(const OpenSystem& sys,
                                      const std::vector<Operator>& charges,
                                      double tol = kDefaultRankTol);

struct SectorNullity {
  std::vector<double> alpha_label;
  std::vector<double> beta_label;
  int block_dim = 0;
  std::int64_t nullity = 0;
  double gap_ratio = 0.0;
  bool uncertain = false;
};

struct DegeneracyOutcome {
  std::int64_t nullity = 0;
  double min_gap_ratio = 0.0;  // worst block diagnostic
  bool uncertain = false;
  std::vector<SectorNullity> sectors;
};

// Steady-state degeneracy: sum of block kernel dimensions. Without charges
// the full matrix is densified, allowed only for d^2 <= 4096. Block jobs
// run on SYMMKERNEL_THREADS threads (default 1).
DegeneracyOutcome degeneracy(const OpenSystem& sys,
                             const std::vector<Operator>& charges,
                             double tol = kDefaultRankTol);

// Fixed-step 4th-order integration of the master equation on the vectorized
// state. Validates that rho0 is a density matrix and that the result keeps
// trace and positivity within 1e-9 / -1e-8.
Operator evolve(const OpenSystem& sys, const Operator& rho0, double total_time, double dt);

}  // namespace symk
