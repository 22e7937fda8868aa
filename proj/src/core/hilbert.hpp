#pragma once

#include <string>
#include <vector>

namespace symk {

// Finite tensor-product Hilbert space. `site_dims` multiply to `dim`;
// `basis_labels`, when non-empty, carries one unique label per basis state.
struct HilbertSpace {
  int dim = 0;
  std::vector<int> site_dims;
  std::vector<std::string> basis_labels;

  int num_sites() const { return static_cast<int>(site_dims.size()); }
};

HilbertSpace make_space(std::vector<int> site_dims,
                        std::vector<std::string> basis_labels = {});
HilbertSpace qubit_space(int num_sites);

// Spaces are interchangeable when dim and site structure agree; labels are
// annotation only.
bool same_space(const HilbertSpace& a, const HilbertSpace& b);

}  // namespace symk
