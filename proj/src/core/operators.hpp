#pragma once

#include <iosfwd>
#include <string>

#include "core/hilbert.hpp"
#include "core/types.hpp"

namespace symk {

// Complex linear operator on a labeled finite Hilbert space. Entries are
// dense; all stored values are finite.
struct Operator {
  HilbertSpace space;
  Matrix entries;

  int dim() const { return space.dim; }
};

// Validates squareness, size against the space, and finiteness.
Operator make_operator(HilbertSpace space, Matrix entries);
Operator identity_op(const HilbertSpace& space);
Operator zero_op(const HilbertSpace& space);

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex c, const Operator& a);
Operator scale(const Operator& a, Complex c);

// Conjugate transpose.
Operator dagger(const Operator& a);

Operator commutator(const Operator& a, const Operator& b);      // AB - BA
Operator anticommutator(const Operator& a, const Operator& b);  // AB + BA

// Kronecker product; site_dims concatenate.
Operator kron(const Operator& a, const Operator& b);

// I x ... x local x ... x I with `local` at 1-based position `site`
// (site 1 = leftmost Kronecker factor).
Operator embed(const Operator& local, int site, const HilbertSpace& space);

// Fermionic annihilation operator for 1-based `mode` on a chain of
// `num_modes` two-level modes: (sigma_z x ... ) x sigma_minus x (I x ...),
// occupation basis |0> = empty, |1> = occupied.
Operator jordan_wigner(int mode, int num_modes);

bool is_hermitian(const Operator& a, double tol = kDefaultCompareTol);

// 2x2 building blocks, Pauli convention.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix sigma_plus();   // |1><0|
Matrix sigma_minus();  // |0><1|

// Coordinate text format: line 1 "dim nnz", then nnz lines
// "row col re im", 0-based indices, row-major sorted.
std::string dump_matrix_coordinate(const Matrix& m);
std::string dump_operator(const Operator& a);
Matrix parse_matrix_coordinate(std::istream& in);
void write_matrix_coordinate(const std::string& path, const Matrix& m);

}  // namespace symk
