#include "core/operators.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace symk {

namespace {

void require_same_space(const Operator& a, const Operator& b, const char* what) {
  if (!same_space(a.space, b.space))
    throw std::invalid_argument(std::string(what) + ": operators live on different spaces");
}

void require_finite(const Matrix& m) {
  if (!m.allFinite()) throw std::invalid_argument("operator entries must be finite");
}

}  // namespace

Operator make_operator(HilbertSpace space, Matrix entries) {
  if (entries.rows() != entries.cols())
    throw std::invalid_argument("operator matrix must be square");
  if (entries.rows() != space.dim)
    throw std::invalid_argument("operator matrix size does not match the space");
  require_finite(entries);
  return Operator{std::move(space), std::move(entries)};
}

Operator identity_op(const HilbertSpace& space) {
  return Operator{space, Matrix::Identity(space.dim, space.dim)};
}

Operator zero_op(const HilbertSpace& space) {
  return Operator{space, Matrix::Zero(space.dim, space.dim)};
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_space(a, b, "add");
  return Operator{a.space, a.entries + b.entries};
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_space(a, b, "sub");
  return Operator{a.space, a.entries - b.entries};
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_space(a, b, "mul");
  return Operator{a.space, a.entries * b.entries};
}

Operator operator*(Complex c, const Operator& a) { return scale(a, c); }

Operator scale(const Operator& a, Complex c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw std::invalid_argument("scale factor must be finite");
  return Operator{a.space, c * a.entries};
}

Operator dagger(const Operator& a) { return Operator{a.space, a.entries.adjoint()}; }

Operator commutator(const Operator& a, const Operator& b) {
  require_same_space(a, b, "commutator");
  return Operator{a.space, a.entries * b.entries - b.entries * a.entries};
}

Operator anticommutator(const Operator& a, const Operator& b) {
  require_same_space(a, b, "anticommutator");
  return Operator{a.space, a.entries * b.entries + b.entries * a.entries};
}

Operator kron(const Operator& a, const Operator& b) {
  const int da = a.dim();
  const int db = b.dim();
  Matrix out(static_cast<long long>(da) * db, static_cast<long long>(da) * db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k)
      out.block(static_cast<long long>(i) * db, static_cast<long long>(k) * db, db, db) =
          a.entries(i, k) * b.entries;
  std::vector<int> dims = a.space.site_dims;
  dims.insert(dims.end(), b.space.site_dims.begin(), b.space.site_dims.end());
  return Operator{make_space(std::move(dims)), std::move(out)};
}

Operator embed(const Operator& local, int site, const HilbertSpace& space) {
  const int n = space.num_sites();
  if (site < 1 || site > n) throw std::invalid_argument("embed: site out of range");
  if (local.dim() != space.site_dims[site - 1])
    throw std::invalid_argument("embed: local dimension does not match the site");
  Matrix acc = Matrix::Identity(1, 1);
  auto grow = [&acc](const Matrix& factor) {
    const long long da = acc.rows(), db = factor.rows();
    Matrix out(da * db, da * db);
    for (long long i = 0; i < da; ++i)
      for (long long k = 0; k < da; ++k)
        out.block(i * db, k * db, db, db) = acc(i, k) * factor;
    acc = std::move(out);
  };
  for (int s = 1; s <= n; ++s) {
    const int d = space.site_dims[s - 1];
    if (s == site)
      grow(local.entries);
    else
      grow(Matrix::Identity(d, d));
  }
  return Operator{space, std::move(acc)};
}

Operator jordan_wigner(int mode, int num_modes) {
  if (num_modes < 1) throw std::invalid_argument("jordan_wigner: need at least one mode");
  if (mode < 1 || mode > num_modes)
    throw std::invalid_argument("jordan_wigner: mode out of range");
  const HilbertSpace space = qubit_space(num_modes);
  Matrix acc = Matrix::Identity(1, 1);
  const Matrix z = pauli_z();
  const Matrix lower = sigma_minus();
  const Matrix id = Matrix::Identity(2, 2);
  for (int m = 1; m <= num_modes; ++m) {
    const Matrix& factor = (m < mode) ? z : (m == mode ? lower : id);
    Matrix out(acc.rows() * 2, acc.rows() * 2);
    for (long long i = 0; i < acc.rows(); ++i)
      for (long long k = 0; k < acc.rows(); ++k)
        out.block(i * 2, k * 2, 2, 2) = acc(i, k) * factor;
    acc = std::move(out);
  }
  return Operator{space, std::move(acc)};
}

bool is_hermitian(const Operator& a, double tol) {
  return approx_equal(a.entries, a.entries.adjoint(), tol);
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1;
  return m;
}

Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1;
  return m;
}

std::string dump_matrix_coordinate(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("coordinate dump expects a square matrix");
  std::ostringstream out;
  long long nnz = 0;
  for (long long i = 0; i < m.rows(); ++i)
    for (long long j = 0; j < m.cols(); ++j)
      if (m(i, j) != Complex(0.0, 0.0)) ++nnz;
  out << m.rows() << ' ' << nnz << '\n';
  char buf[128];
  for (long long i = 0; i < m.rows(); ++i)
    for (long long j = 0; j < m.cols(); ++j) {
      const Complex v = m(i, j);
      if (v == Complex(0.0, 0.0)) continue;
      std::snprintf(buf, sizeof buf, "%lld %lld %.17g %.17g\n", i, j, v.real(), v.imag());
      out << buf;
    }
  return out.str();
}

std::string dump_operator(const Operator& a) { return dump_matrix_coordinate(a.entries); }

Matrix parse_matrix_coordinate(std::istream& in) {
  long long dim = 0, nnz = 0;
  if (!(in >> dim >> nnz) || dim < 0 || nnz < 0)
    throw std::invalid_argument("coordinate parse: bad header");
  Matrix m = Matrix::Zero(dim, dim);
  for (long long k = 0; k < nnz; ++k) {
    long long i, j;
    double re, im;
    if (!(in >> i >> j >> re >> im))
      throw std::invalid_argument("coordinate parse: truncated entry list");
    if (i < 0 || i >= dim || j < 0 || j >= dim)
      throw std::invalid_argument("coordinate parse: index out of range");
    m(i, j) = Complex(re, im);
  }
  return m;
}

void write_matrix_coordinate(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << dump_matrix_coordinate(m);
}

}  // namespace symk
