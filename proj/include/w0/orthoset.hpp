#pragma once

// Sets of pairwise strongly orthogonal restricted roots whose reflections
// compose to the longest restricted Weyl element.

#include <string>
#include <vector>

#include "w0/dynkin.hpp"
#include "w0/linalg.hpp"
#include "w0/realforms.hpp"

namespace w0 {

struct OrthoSet {
  DynkinType type;
  std::vector<Vec> roots;
};

/// A root system of the given (possibly non-reduced) type in its standard
/// Bourbaki realisation. BC_n is realised as B_n together with the doubled
/// short roots 2e_i.
struct StandardSystem {
  DynkinType type;
  std::vector<Vec> simple;
  std::vector<Vec> roots;  // sorted
  std::size_t ambient_dim = 0;
};
StandardSystem standard_system(const DynkinType& type);

/// The set for `type` in its standard realisation. Throws InvalidArgument
/// for unsupported types.
OrthoSet ortho_set(const std::string& family, int rank);

/// The same set transported to a* of a real form through simple-root
/// coordinates.
OrthoSet ortho_set(const RealForm& form);

/// Union over the irreducible components of a reduced simple system (used
/// for products such as A1^s); each component is handled in place.
std::vector<Vec> ortho_set_of_simple_system(const std::vector<Vec>& simple);

struct OrthoVerdict {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Check pairwise strong orthogonality against `roots` and that the product
/// of the reflections equals `w0` (both on the ambient space). Every element
/// of `xi` must lie in `roots`.
OrthoVerdict verify_ortho_set(const std::vector<Vec>& xi, const std::vector<Vec>& roots,
                              const Matrix& w0);
OrthoVerdict verify_ortho_set(const std::vector<Vec>& xi, const RealForm& form);

/// Product of the reflections in `xi` on an ambient space of dimension `n`.
Matrix reflection_product(const std::vector<Vec>& xi, std::size_t n);

}  // namespace w0
