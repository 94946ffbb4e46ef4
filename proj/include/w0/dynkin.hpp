#pragma once

// Recognising Dynkin diagrams: given the simple roots of an irreducible root
// system in arbitrary order, find its type and the Bourbaki numbering.

#include <string>
#include <vector>

#include "w0/linalg.hpp"

namespace w0 {

struct DynkinType {
  std::string family;  // "A".."G", or "BC" for the non-reduced series
  int rank = 0;

  std::string name() const { return family + std::to_string(rank); }
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Canonical name for low-rank coincidences: B1 = C1 = A1, D3 = A3.
/// B2 and C2 are kept apart because their Bourbaki numberings differ.
DynkinType canonical_type(DynkinType t);

struct OrderedDiagram {
  DynkinType type;
  std::vector<int> order;  // order[k] = input index of Bourbaki node k+1
};

/// Identify an irreducible reduced simple system. `hint_family` (may be
/// empty) picks between B2 and C2 and is otherwise checked for
/// consistency.
OrderedDiagram bourbaki_order(const std::vector<Vec>& simple,
                              const std::string& hint_family = "");

/// Connected components of the Dynkin graph (indices into `simple`), each
/// sorted, components ordered by their smallest index.
std::vector<std::vector<int>> dynkin_components(const std::vector<Vec>& simple);

}  // namespace w0
