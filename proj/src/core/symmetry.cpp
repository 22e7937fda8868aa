#include "core/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "core/svd.hpp"

namespace symk {

namespace {

void check_total(const IrrepDecomposition& dec) {
  std::int64_t sum = 0;
  for (const auto& [label, mult] : dec.labels) sum += mult * label.dim;
  if (sum != dec.total_dim)
    throw NumericalError("irrep decomposition does not add up to the space dimension");
}

// Sum of the three Pauli operators over all sites.
Operator spin_sum(int num_sites, const Matrix& local) {
  const HilbertSpace space = qubit_space(num_sites);
  Operator sum = zero_op(space);
  const Operator local_op{make_space({2}), local};
  for (int i = 1; i <= num_sites; ++i) sum = sum + embed(local_op, i, space);
  return sum;
}

}  // namespace

std::string to_string(IrrepFamily family) {
  switch (family) {
    case IrrepFamily::SU2: return "SU2";
    case IrrepFamily::U1: return "U1";
    case IrrepFamily::SU2xU1: return "SU2xU1";
    case IrrepFamily::SymGroup: return "SymGroup";
  }
  return "?";
}

nlohmann::ordered_json irrep_decomposition_json(const IrrepDecomposition& dec) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& [label, mult] : dec.labels) {
    nlohmann::ordered_json item;
    item["family"] = to_string(label.family);
    item["dim"] = label.dim;
    item["charge"] = label.charge;
    item["tag"] = label.tag;
    item["multiplicity"] = mult;
    list.push_back(std::move(item));
  }
  return list;
}

IrrepDecomposition su2_chain_decompose(int num_sites) {
  if (num_sites < 1) throw std::invalid_argument("need at least one site");
  // mult[t] = number of total-spin-t/2 multiplets (t = doubled spin)
  std::map<int, std::int64_t> mult{{1, 1}};
  for (int n = 2; n <= num_sites; ++n) {
    std::map<int, std::int64_t> next;
    for (const auto& [t, m] : mult) {
      next[t + 1] += m;
      if (t >= 1) next[t - 1] += m;
    }
    mult = std::move(next);
  }
  IrrepDecomposition dec;
  dec.total_dim = std::int64_t{1} << num_sites;
  for (const auto& [t, m] : mult)
    dec.labels[IrrepLabel{IrrepFamily::SU2, t + 1, 0, ""}] = m;
  check_total(dec);
  return dec;
}

std::int64_t distinct_irrep_bound(const IrrepDecomposition& dec) {
  std::int64_t sum = 0;
  for (const auto& [label, mult] : dec.labels) {
    (void)mult;
    sum += static_cast<std::int64_t>(label.dim) * label.dim;
  }
  return sum;
}

IrrepDecomposition network_decompose(int num_free_sites) {
  if (num_free_sites < 1) throw std::invalid_argument("need at least one free site");
  IrrepDecomposition dec;
  dec.total_dim = num_free_sites;
  dec.labels[IrrepLabel{IrrepFamily::SymGroup, 1, 0, "trivial"}] = 1;
  if (num_free_sites > 1)
    dec.labels[IrrepLabel{IrrepFamily::SymGroup, num_free_sites - 1, 0, "standard"}] = 1;
  check_total(dec);
  return dec;
}

std::int64_t network_bound(int num_free_sites) {
  if (num_free_sites < 1) throw std::invalid_argument("need at least one free site");
  const std::int64_t n = num_free_sites;
  return (n - 1) * (n - 1) + 1;
}

CasimirCount casimir_degeneracy(int num_sites, const Operator* hamiltonian, double tol) {
  const IrrepDecomposition dec = su2_chain_decompose(num_sites);
  CasimirCount out;
  if (hamiltonian == nullptr) {
    for (const auto& [label, mult] : dec.labels)
      out.count += mult * static_cast<std::int64_t>(label.dim) * label.dim;
    return out;
  }

  const HilbertSpace space = qubit_space(num_sites);
  if (!same_space(hamiltonian->space, space))
    throw std::invalid_argument("Hamiltonian does not live on the spin-chain space");
  const Operator sx = spin_sum(num_sites, pauli_x());
  const Operator sy = spin_sum(num_sites, pauli_y());
  const Operator sz = spin_sum(num_sites, pauli_z());
  for (const Operator* s : {&sx, &sy, &sz})
    if (!commutes(hamiltonian->entries, s->entries, kDefaultSymmetryTol))
      throw std::invalid_argument("Hamiltonian is not SU(2)-symmetric");

  const Operator s_sq = sx * sx + sy * sy + sz * sz;
  const EigenbasisResult basis = simultaneous_eigenbasis({s_sq, sz}, tol);

  out.energy_checked = true;
  for (const auto& [label, mult] : dec.labels) {
    const int t = label.dim - 1;                    // doubled spin
    const double casimir = static_cast<double>(t) * (t + 2);
    // highest-weight columns of this spin class
    std::vector<int> cols;
    for (int c = 0; c < space.dim; ++c) {
      const auto& lab = basis.sector_labels[c];
      if (std::abs(lab[0] - casimir) < 0.5 && std::abs(lab[1] - t) < 0.5) cols.push_back(c);
    }
    if (static_cast<std::int64_t>(cols.size()) != mult)
      throw NumericalError("spin-class multiplicity mismatch in the eigenbasis");
    Matrix w(space.dim, cols.size());
    for (size_t k = 0; k < cols.size(); ++k) w.col(k) = basis.unitary.entries.col(cols[k]);
    Matrix hw = w.adjoint() * hamiltonian->entries * w;
    hw = 0.5 * (hw + Matrix(hw.adjoint()));
    Eigen::SelfAdjointEigenSolver<Matrix> es(hw);
    std::vector<double> energies(es.eigenvalues().data(),
                                 es.eigenvalues().data() + es.eigenvalues().size());
    const std::vector<double> reps = cluster_values(energies, tol);
    std::map<double, std::int64_t> classes;
    for (double r : reps) ++classes[r];
    std::int64_t weight = 0;
    for (const auto& [rep, size] : classes) {
      (void)rep;
      weight += size * size;
      if (size > 1) out.energies_distinct = false;
    }
    out.count += weight * static_cast<std::int64_t>(label.dim) * label.dim;
  }
  return out;
}

IrrepDecomposition hubbard_decompose(int num_sites) {
  if (num_sites < 1) throw std::invalid_argument("need at least one site");
  // (irrep dim, doubled Sz charge) -> multiplicity
  using Key = std::pair<int, int>;
  std::map<Key, std::int64_t> mult{{{2, 0}, 1}, {{1, 1}, 1}, {{1, -1}, 1}};
  for (int n = 2; n <= num_sites; ++n) {
    std::map<Key, std::int64_t> next;
    for (const auto& [key, m] : mult) {
      const auto [d, q] = key;
      // x (doublet, 0): SU(2) product d x 2 = (d+1) + (d-1)
      next[{d + 1, q}] += m;
      if (d >= 2) next[{d - 1, q}] += m;
      // x (singlet, +-1): charge shift
      next[{d, q + 1}] += m;
      next[{d, q - 1}] += m;
    }
    mult = std::move(next);
  }
  IrrepDecomposition dec;
  dec.total_dim = std::int64_t{1} << (2 * num_sites);
  for (const auto& [key, m] : mult)
    dec.labels[IrrepLabel{IrrepFamily::SU2xU1, key.first, key.second, ""}] = m;
  check_total(dec);
  return dec;
}

std::int64_t hubbard_bound(int num_sites) {
  if (num_sites < 1) throw std::invalid_argument("need at least one site");
  std::int64_t sum = 0;
  for (std::int64_t n = 1; n <= num_sites + 1; ++n)
    sum += (num_sites + 2 - n) * n * n;
  return sum;
}

std::int64_t algebra_dimension(const std::vector<Operator>& generators, double tol) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  const HilbertSpace& space = generators.front().space;
  for (const auto& g : generators)
    if (!same_space(g.space, space))
      throw std::invalid_argument("generators live on different spaces");
  const int d = space.dim;
  if (d > 256) throw BudgetError("algebra_dimension limited to dim <= 256");

  auto normalized_vec = [&](const Matrix& m) -> std::optional<Vector> {
    Vector v(static_cast<Eigen::Index>(d) * d);
    Eigen::Index p = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) v(p++) = m(i, j);
    const double norm = v.norm();
    if (norm < 1e-300) return std::nullopt;
    return Vector(v / norm);
  };

  std::vector<Matrix> basis;
  {
    std::vector<Matrix> seed;
    seed.push_back(Matrix::Identity(d, d));
    for (const auto& g : generators) seed.push_back(g.entries);
    Matrix stack(static_cast<Eigen::Index>(d) * d, seed.size());
    Eigen::Index col = 0;
    for (const auto& m : seed)
      if (auto v = normalized_vec(m)) stack.col(col++) = *v;
    stack.conservativeResize(Eigen::NoChange, col);
    const FullSvd s = svd_full(stack);
    const int r = rank_with_tolerance(s.sv, tol, std::max(stack.rows(), stack.cols()));
    for (int k = 0; k < r; ++k) basis.push_back(devectorize(s.u.col(k)));
  }

  for (int iter = 0; iter < 128; ++iter) {
    const size_t r = basis.size();
    std::vector<Vector> candidates;
    candidates.reserve(r + r * r);
    for (const auto& m : basis) candidates.push_back(*normalized_vec(m));
    for (const auto& a : basis)
      for (const auto& b : basis)
        if (auto v = normalized_vec(a * b)) candidates.push_back(*v);
    Matrix stack(static_cast<Eigen::Index>(d) * d, candidates.size());
    for (size_t k = 0; k < candidates.size(); ++k) stack.col(k) = candidates[k];
    const FullSvd s = svd_full(stack);
    const int new_rank = rank_with_tolerance(s.sv, tol, std::max(stack.rows(), stack.cols()));
    if (static_cast<size_t>(new_rank) == r) return static_cast<std::int64_t>(r);
    basis.clear();
    for (int k = 0; k < new_rank; ++k) basis.push_back(devectorize(s.u.col(k)));
  }
  throw NumericalError("algebra span closure did not stabilize");
}

EigenbasisResult simultaneous_eigenbasis(const std::vector<Operator>& ops, double tol) {
  if (ops.empty()) throw std::invalid_argument("need at least one operator");
  const HilbertSpace& space = ops.front().space;
  const int d = space.dim;
  for (const auto& op : ops) {
    if (!same_space(op.space, space))
      throw std::invalid_argument("operators live on different spaces");
    if (!is_hermitian(op, std::max(tol, kDefaultCompareTol)))
      throw std::invalid_argument("operators must be Hermitian");
  }
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i + 1; j < ops.size(); ++j)
      if (!commutes(ops[i].entries, ops[j].entries, std::max(tol, kDefaultSymmetryTol)))
        throw std::invalid_argument("operators must commute pairwise");

  Matrix u = Matrix::Identity(d, d);
  std::vector<std::pair<int, int>> ranges{{0, d}};  // [start, length)
  std::vector<std::vector<double>> labels(d);

  for (const auto& op : ops) {
    std::vector<double> raw(d);
    for (const auto& [start, len] : ranges) {
      const Matrix ub = u.middleCols(start, len);
      Matrix b = ub.adjoint() * op.entries * ub;
      b = 0.5 * (b + Matrix(b.adjoint()));
      Eigen::SelfAdjointEigenSolver<Matrix> es(b);
      u.middleCols(start, len) = ub * es.eigenvectors();
      for (int k = 0; k < len; ++k) raw[start + k] = es.eigenvalues()(k);
    }
    const std::vector<double> reps = cluster_values(raw, std::max(tol, kDefaultCompareTol));
    for (int c = 0; c < d; ++c) labels[c].push_back(reps[c]);
    std::vector<std::pair<int, int>> split;
    for (const auto& [start, len] : ranges) {
      int s = start;
      for (int c = start + 1; c < start + len; ++c)
        if (reps[c] != reps[c - 1]) {
          split.emplace_back(s, c - s);
          s = c;
        }
      split.emplace_back(s, start + len - s);
    }
    ranges = std::move(split);
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return labels[i] < labels[j]; });
  Matrix sorted(d, d);
  std::vector<std::vector<double>> sorted_labels(d);
  for (int c = 0; c < d; ++c) {
    sorted.col(c) = u.col(order[c]);
    sorted_labels[c] = labels[order[c]];
  }

  const double unitary_residual = max_abs(sorted.adjoint() * sorted - Matrix::Identity(d, d));
  if (unitary_residual > 1e-10 * d)
    throw NumericalError("eigenbasis construction lost unitarity");
  for (const auto& op : ops) {
    Matrix rotated = sorted.adjoint() * op.entries * sorted;
    rotated.diagonal().setZero();
    if (max_abs(rotated) > std::max(tol, kDefaultCompareTol) * std::max(1.0, max_abs(op.entries)) * d)
      throw NumericalError("operators could not be jointly diagonalized within tolerance");
  }

  return EigenbasisResult{Operator{space, std::move(sorted)}, std::move(sorted_labels)};
}

}  // namespace symk
