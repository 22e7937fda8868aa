#include "core/models.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace symk {

namespace {

HilbertSpace network_space(int num_sites) {
  std::vector<std::string> labels;
  labels.reserve(num_sites + 1);
  for (int i = 0; i <= num_sites; ++i) labels.push_back(std::to_string(i));
  return make_space({num_sites + 1}, std::move(labels));
}

// Portable symmetric-uniform draws: the bit mapping is fixed so one seed
// yields one jump-operator family everywhere.
struct UniformRng {
  std::mt19937_64 engine;
  explicit UniformRng(std::uint64_t seed) : engine(seed) {}
  double symmetric() {  // uniform on [-1, 1)
    const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return 2.0 * unit - 1.0;
  }
};

std::vector<Operator> embedded_paulis(int num_sites, const Matrix& local) {
  const HilbertSpace space = qubit_space(num_sites);
  const Operator local_op{make_space({2}), local};
  std::vector<Operator> out;
  out.reserve(num_sites);
  for (int i = 1; i <= num_sites; ++i) out.push_back(embed(local_op, i, space));
  return out;
}

Operator xxx_hamiltonian(int num_sites) {
  const auto sx = embedded_paulis(num_sites, pauli_x());
  const auto sy = embedded_paulis(num_sites, pauli_y());
  const auto sz = embedded_paulis(num_sites, pauli_z());
  Operator h = zero_op(qubit_space(num_sites));
  for (int i = 0; i + 1 < num_sites; ++i)
    h = h + sx[i] * sx[i + 1] + sy[i] * sy[i + 1] + sz[i] * sz[i + 1];
  return h;
}

}  // namespace

OpenSystem network_system(const NetworkParams& params) {
  const int n = params.sites;
  if (n < 2) throw std::invalid_argument("network needs at least two sites");
  std::set<int> seen;
  for (const auto& bath : params.baths) {
    if (bath.site < 1 || bath.site > n)
      throw std::invalid_argument("bath site out of range");
    if (!seen.insert(bath.site).second)
      throw std::invalid_argument("bath sites must be distinct");
  }
  const HilbertSpace space = network_space(n);
  Matrix h = Matrix::Zero(n + 1, n + 1);
  h(0, 0) = params.eps_ground;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) h(i, j) = (i == j) ? params.eps_site : params.hop;
  std::vector<std::pair<Operator, double>> jumps;
  for (const auto& bath : params.baths) {
    Matrix absorb = Matrix::Zero(n + 1, n + 1);
    absorb(bath.site, 0) = bath.mu_plus;
    Matrix emit = Matrix::Zero(n + 1, n + 1);
    emit(0, bath.site) = bath.mu_minus;
    jumps.emplace_back(Operator{space, std::move(absorb)}, 1.0);
    jumps.emplace_back(Operator{space, std::move(emit)}, 1.0);
  }
  return make_open_system(Operator{space, std::move(h)}, std::move(jumps));
}

Operator exchange_operator(int i, int j, int num_sites) {
  if (i < 1 || j <= i || j > num_sites)
    throw std::invalid_argument("exchange_operator needs 1 <= i < j <= N");
  Matrix p = Matrix::Identity(num_sites + 1, num_sites + 1);
  p(i, i) = 0;
  p(j, j) = 0;
  p(i, j) = 1;
  p(j, i) = 1;
  return Operator{network_space(num_sites), std::move(p)};
}

Operator network_symmetry_basis(int num_sites, const std::vector<int>& free_sites) {
  if (free_sites.empty()) throw std::invalid_argument("need at least one free site");
  std::set<int> seen;
  for (int s : free_sites) {
    if (s < 1 || s > num_sites) throw std::invalid_argument("free site out of range");
    if (!seen.insert(s).second) throw std::invalid_argument("free sites must be distinct");
  }
  const int n = static_cast<int>(free_sites.size());
  const int dim = num_sites + 1;

  // Householder reflection sending e_1 to the uniform vector; its remaining
  // columns complete phi_sym orthonormally with zero-sum coefficients.
  Eigen::MatrixXd house = Eigen::MatrixXd::Identity(n, n);
  if (n > 1) {
    Eigen::VectorXd phi = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    Eigen::VectorXd v = phi - Eigen::VectorXd::Unit(n, 0);
    const double vv = v.squaredNorm();
    if (vv > 1e-28) house -= (2.0 / vv) * (v * v.transpose());
  }

  Matrix u = Matrix::Zero(dim, dim);
  int col = 0;
  for (int k = 1; k < n; ++k, ++col)  // psi_1 .. psi_{n-1}
    for (int r = 0; r < n; ++r) u(free_sites[r], col) = house(r, k);
  for (int r = 0; r < n; ++r) u(free_sites[r], col) = house(r, 0);  // phi_sym
  ++col;
  u(0, col++) = 1.0;  // ground state
  for (int s = 1; s <= num_sites; ++s)
    if (!seen.count(s)) u(s, col++) = 1.0;
  return Operator{network_space(num_sites), std::move(u)};
}

OpenSystem xxx_system_random(int num_sites, const RandomDissipationSpec& spec) {
  if (num_sites < 2) throw std::invalid_argument("spin chain needs at least two sites");
  if (spec.num_jumps < 1) throw std::invalid_argument("need at least one jump operator");
  const auto sx = embedded_paulis(num_sites, pauli_x());
  const auto sy = embedded_paulis(num_sites, pauli_y());
  const auto sz = embedded_paulis(num_sites, pauli_z());
  const HilbertSpace space = qubit_space(num_sites);

  std::vector<Operator> pair_coupling;  // (i,j) row-major, includes i == j
  pair_coupling.reserve(static_cast<size_t>(num_sites) * num_sites);
  for (int i = 0; i < num_sites; ++i)
    for (int j = 0; j < num_sites; ++j)
      pair_coupling.push_back(sx[i] * sx[j] + sy[i] * sy[j] + sz[i] * sz[j]);

  UniformRng rng(spec.seed);
  std::vector<std::pair<Operator, double>> jumps;
  for (int l = 0; l < spec.num_jumps; ++l) {
    Operator jump = zero_op(space);
    for (int i = 0; i < num_sites; ++i)
      for (int j = 0; j < num_sites; ++j) {
        const double re = rng.symmetric();
        const double im = rng.symmetric();
        jump = jump + Complex(re, im) * pair_coupling[static_cast<size_t>(i) * num_sites + j];
      }
    jumps.emplace_back(std::move(jump), 1.0);
  }
  return make_open_system(xxx_hamiltonian(num_sites), std::move(jumps));
}

OpenSystem xxx_system_casimir(int num_sites, double gamma) {
  if (num_sites < 2) throw std::invalid_argument("spin chain needs at least two sites");
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be nonnegative");
  const auto [sx, sy, sz] = total_spin_ops(num_sites);
  const Operator casimir = sx * sx + sy * sy + sz * sz;
  return make_open_system(xxx_hamiltonian(num_sites), {{casimir, gamma}});
}

std::array<Operator, 3> total_spin_ops(int num_sites) {
  const HilbertSpace space = qubit_space(num_sites);
  std::array<Operator, 3> out{zero_op(space), zero_op(space), zero_op(space)};
  const Matrix locals[3] = {pauli_x(), pauli_y(), pauli_z()};
  for (int a = 0; a < 3; ++a) {
    const Operator local{make_space({2}), locals[a]};
    for (int i = 1; i <= num_sites; ++i) out[a] = out[a] + embed(local, i, space);
  }
  return out;
}

Operator hubbard_annihilation(int site, Spin spin, int num_sites) {
  if (site < 1 || site > num_sites) throw std::invalid_argument("lattice site out of range");
  const int mode = 2 * site - (spin == Spin::Up ? 1 : 0);
  return jordan_wigner(mode, 2 * num_sites);
}

OpenSystem hubbard_system(const HubbardParams& params) {
  const int n = params.sites;
  if (n < 1) throw std::invalid_argument("lattice needs at least one site");
  if (params.u_int == 0.0)
    throw std::invalid_argument(
        "u_int = 0 enlarges the symmetry group and inflates the degeneracy; "
        "pick a nonzero interaction");
  if (!(params.gamma >= 0.0)) throw std::invalid_argument("gamma must be nonnegative");

  const HilbertSpace space = qubit_space(2 * n);
  Operator h = zero_op(space);
  for (int i = 1; i < n; ++i)
    for (Spin spin : {Spin::Up, Spin::Down}) {
      const Operator ci = hubbard_annihilation(i, spin, n);
      const Operator cj = hubbard_annihilation(i + 1, spin, n);
      const Operator hop = dagger(ci) * cj;
      h = h + Complex(-params.t_hop) * (hop + dagger(hop));
    }
  for (int i = 1; i <= n; ++i) {
    const Operator cu = hubbard_annihilation(i, Spin::Up, n);
    const Operator cd = hubbard_annihilation(i, Spin::Down, n);
    h = h + Complex(params.u_int) * (dagger(cu) * cu) * (dagger(cd) * cd);
  }

  std::vector<std::pair<Operator, double>> jumps;
  for (int i = 1; i <= n; ++i) {
    const Operator cu = hubbard_annihilation(i, Spin::Up, n);
    const Operator cd = hubbard_annihilation(i, Spin::Down, n);
    const Operator dephase =
        Complex(0.5) * (dagger(cu) * cu - dagger(cd) * cd);
    jumps.emplace_back(dephase, params.gamma);
  }
  return make_open_system(std::move(h), std::move(jumps));
}

HubbardSymmetryOps hubbard_symmetry_ops(int num_sites) {
  const HilbertSpace space = qubit_space(2 * num_sites);
  Operator s_plus = zero_op(space);
  Operator eta_plus = zero_op(space);
  Operator s_z = zero_op(space);
  Operator eta_z = zero_op(space);
  const Operator id = identity_op(space);
  for (int i = 1; i <= num_sites; ++i) {
    const Operator cu = hubbard_annihilation(i, Spin::Up, num_sites);
    const Operator cd = hubbard_annihilation(i, Spin::Down, num_sites);
    const Operator nu = dagger(cu) * cu;
    const Operator nd = dagger(cd) * cd;
    s_plus = s_plus + dagger(cu) * cd;
    s_z = s_z + Complex(0.5) * (nu - nd);
    // Alternating sign; the site-1 sign is fixed so the one-site doublon
    // raising operator carries a positive amplitude.
    const double sign = (i % 2 == 1) ? 1.0 : -1.0;
    eta_plus = eta_plus + Complex(sign) * (dagger(cu) * dagger(cd));
    eta_z = eta_z + Complex(0.5) * (nu + nd - id);
  }
  return HubbardSymmetryOps{s_plus, dagger(s_plus), s_z,
                            eta_plus, dagger(eta_plus), eta_z};
}

Operator hubbard_number_up(int num_sites) {
  const HilbertSpace space = qubit_space(2 * num_sites);
  Operator sum = zero_op(space);
  for (int i = 1; i <= num_sites; ++i) {
    const Operator c = hubbard_annihilation(i, Spin::Up, num_sites);
    sum = sum + dagger(c) * c;
  }
  return sum;
}

Operator hubbard_number_down(int num_sites) {
  const HilbertSpace space = qubit_space(2 * num_sites);
  Operator sum = zero_op(space);
  for (int i = 1; i <= num_sites; ++i) {
    const Operator c = hubbard_annihilation(i, Spin::Down, num_sites);
    sum = sum + dagger(c) * c;
  }
  return sum;
}

}  // namespace symk
