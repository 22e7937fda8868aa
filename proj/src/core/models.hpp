#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/superop.hpp"

namespace symk {

// --- fully connected exciton network -------------------------------------

struct BathCoupling {
  int site = 0;        // 1-based
  double mu_plus = 0;  // absorption amplitude |site><0|
  double mu_minus = 0; // emission amplitude   |0><site|
};

struct NetworkParams {
  int sites = 0;  // N; Hilbert dimension is N+1
  std::vector<BathCoupling> baths;
  double eps_ground = 0.0;
  double eps_site = 10.0;
  double hop = 20.0;
};

OpenSystem network_system(const NetworkParams& params);

// I - |i><i| - |j><j| + |i><j| + |j><i| on the (N+1)-dimensional space.
Operator exchange_operator(int i, int j, int num_sites);

// Unitary from the configuration basis to the exchange-adapted basis,
// columns ordered {psi_1..psi_{n-1}, phi_sym, |0>, remaining sites}.
// phi_sym is the uniform superposition over the free sites; the psi_k are a
// deterministic (Householder) orthonormal completion with zero-sum
// coefficients.
Operator network_symmetry_basis(int num_sites, const std::vector<int>& free_sites);

// --- isotropic spin chain --------------------------------------------------

struct RandomDissipationSpec {
  int num_jumps = 1;
  std::uint64_t seed = 1;
};

// Name of the generator backing seeded draws, recorded in reports.
inline constexpr const char* kRngName = "mt19937_64";

// Open chain with nearest-neighbour isotropic coupling (Pauli convention)
// and `num_jumps` jump operators sum_{i,j} M^{ij} (x_i x_j + y_i y_j + z_i z_j),
// M entries uniform on [-1,1] in both components, unit rates.
OpenSystem xxx_system_random(int num_sites, const RandomDissipationSpec& spec);

// Same chain with the single jump operator S^2 at rate gamma.
OpenSystem xxx_system_casimir(int num_sites, double gamma);

// Total Pauli sums {S^x, S^y, S^z}.
std::array<Operator, 3> total_spin_ops(int num_sites);

// --- fermionic lattice with on-site interaction ----------------------------

struct HubbardParams {
  int sites = 0;
  double t_hop = 1.0;
  double u_int = 2.0;
  double gamma = 1.0;
};

// Open-chain hopping + on-site interaction, with one local spin-dephasing
// jump 1/2 (n_up - n_down) per site at rate gamma. Mode order interleaves
// spins: mode(i,up) = 2i-1, mode(i,down) = 2i.
OpenSystem hubbard_system(const HubbardParams& params);

struct HubbardSymmetryOps {
  Operator s_plus, s_minus, s_z;
  Operator eta_plus, eta_minus, eta_z;
};

HubbardSymmetryOps hubbard_symmetry_ops(int num_sites);

// Total particle-number operators (diagonal strong symmetries of the
// dephased lattice).
Operator hubbard_number_up(int num_sites);
Operator hubbard_number_down(int num_sites);

// Fermion operators for spin sigma on a 1-based lattice site.
enum class Spin { Up, Down };
Operator hubbard_annihilation(int site, Spin spin, int num_sites);

}  // namespace symk
