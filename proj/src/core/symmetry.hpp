#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/operators.hpp"

namespace symk {

enum class IrrepFamily { SU2, U1, SU2xU1, SymGroup };

std::string to_string(IrrepFamily family);

// Label of one irreducible representation: dimension plus, where relevant,
// a doubled U(1) charge (2*Sz, kept integer) or a permutation-group tag.
struct IrrepLabel {
  IrrepFamily family = IrrepFamily::SU2;
  int dim = 1;
  int charge = 0;       // doubled U(1) charge; 0 for chargeless families
  std::string tag;      // "trivial" / "standard" for SymGroup, else empty

  auto operator<=>(const IrrepLabel&) const = default;
};

// Multiset of irreps with multiplicities; total_dim is the represented
// Hilbert dimension, equal to sum of multiplicity * dim.
struct IrrepDecomposition {
  std::map<IrrepLabel, std::int64_t> labels;
  std::int64_t total_dim = 0;
};

nlohmann::ordered_json irrep_decomposition_json(const IrrepDecomposition& dec);

// Multiplicities of total-spin irreps in the N-fold tensor power of the
// spin-1/2 representation, via the angular-momentum addition recursion.
IrrepDecomposition su2_chain_decompose(int num_sites);

// Sum of dim^2 over *distinct* labels; multiplicities do not enter.
std::int64_t distinct_irrep_bound(const IrrepDecomposition& dec);

// Permutation symmetry on n exchangeable sites: trivial + standard irreps,
// giving (n-1)^2 + 1.
IrrepDecomposition network_decompose(int num_free_sites);
std::int64_t network_bound(int num_free_sites);

struct CasimirCount {
  std::int64_t count = 0;
  bool energy_checked = false;
  bool energies_distinct = true;  // meaningful only when energy_checked
};

// Steady-state count for total-spin-squared dissipation: sum over spin
// classes of multiplicity * dim^2, assuming distinct energies inside each
// class. With a Hamiltonian supplied, the energies in each highest-weight
// sector are diagonalized and degenerate classes replace the multiplicity
// by sum of (class size)^2.
CasimirCount casimir_degeneracy(int num_sites, const Operator* hamiltonian = nullptr,
                                double tol = kDefaultRankTol);

// Graded SU(2) x U(1) content of the N-site fermionic lattice with local
// content (doublet, charge 0) + (singlet, +1) + (singlet, -1), built by
// site-wise convolution.
IrrepDecomposition hubbard_decompose(int num_sites);

// Closed form sum_{n=1}^{N+1} (N+2-n) n^2; equals
// distinct_irrep_bound(hubbard_decompose(N)).
std::int64_t hubbard_bound(int num_sites);

// Dimension of the associative algebra generated by {identity} + generators,
// by closing the linear span under pairwise products until the rank
// stabilizes. Guarded to spaces of dimension <= 256.
std::int64_t algebra_dimension(const std::vector<Operator>& generators,
                               double tol = kDefaultRankTol);

struct EigenbasisResult {
  Operator unitary;                               // change of basis, columns = new vectors
  std::vector<std::vector<double>> sector_labels; // one eigenvalue tuple per column
};

// Joint eigenbasis of commuting Hermitian operators; degenerate subspaces
// are resolved operator by operator. Columns are ordered by ascending
// eigenvalue tuple (lexicographic), ties keep construction order.
EigenbasisResult simultaneous_eigenbasis(const std::vector<Operator>& ops,
                                         double tol = kDefaultRankTol);

}  // namespace symk
