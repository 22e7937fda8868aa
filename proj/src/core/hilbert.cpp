#include "core/hilbert.hpp"

#include <set>
#include <stdexcept>

namespace symk {

HilbertSpace make_space(std::vector<int> site_dims,
                        std::vector<std::string> basis_labels) {
  if (site_dims.empty()) throw std::invalid_argument("space needs at least one site");
  long long dim = 1;
  for (int d : site_dims) {
    if (d <= 0) throw std::invalid_argument("site dimensions must be positive");
    dim *= d;
    if (dim > (1 << 30)) throw std::invalid_argument("space dimension overflow");
  }
  if (!basis_labels.empty()) {
    if (static_cast<long long>(basis_labels.size()) != dim)
      throw std::invalid_argument("need one basis label per basis state");
    std::set<std::string> uniq(basis_labels.begin(), basis_labels.end());
    if (uniq.size() != basis_labels.size())
      throw std::invalid_argument("basis labels must be unique");
  }
  HilbertSpace s;
  s.dim = static_cast<int>(dim);
  s.site_dims = std::move(site_dims);
  s.basis_labels = std::move(basis_labels);
  return s;
}

HilbertSpace qubit_space(int num_sites) {
  if (num_sites <= 0) throw std::invalid_argument("need at least one qubit");
  return make_space(std::vector<int>(num_sites, 2));
}

bool same_space(const HilbertSpace& a, const HilbertSpace& b) {
  return a.dim == b.dim && a.site_dims == b.site_dims;
}

}  // namespace symk
