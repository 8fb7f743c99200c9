#pragma once

#include "ea/algebra.hpp"

#include <vector>

namespace ea {

/// Order-theoretic structure derived from a validated algebra.
///
/// `atoms` is the atom basis in ascending id order; it fixes the column
/// order of every matrix built downstream.
struct OrderStructure {
  int n = 0;
  std::vector<char> leq;                   // n*n; leq[p*n+q] != 0 iff p <= q
  std::vector<ElementId> orthosupplement;  // total involution
  std::vector<ElementId> atoms;
  std::vector<int> ord_of;  // greatest k with k*x defined; 0 for the zero element
  bool atomic = false;
  std::vector<ElementId> non_atomic;  // nonzero elements with no atom below (bug indicator)

  bool le(ElementId p, ElementId q) const { return leq[static_cast<size_t>(p) * n + q] != 0; }
};

/// Derives the induced order, orthosupplement, atom basis and orders.
/// Requires a validated algebra; throws std::logic_error if the
/// orthosupplement is not total and unique (impossible on validated input).
OrderStructure derive_order(const EffectAlgebra& alg);

}  // namespace ea
