#pragma once

#include "ea/algebra.hpp"
#include "ea/order.hpp"

#include <optional>
#include <vector>

namespace ea {

/// Multiplicity vector over the atom basis: counts[t] copies of atom t.
using AtomVector = std::vector<int>;

/// All decompositions of the unit, pairwise distinct, ascending
/// lexicographic. Row t of the matrix built from this set is rows[t].
struct SeqSet {
  std::vector<AtomVector> rows;
};

/// Evaluates v[0]*a_0 + v[1]*a_1 + ..., accumulating left to right in
/// basis order. nullopt when an intermediate sum is undefined.
std::optional<ElementId> vector_sum(const EffectAlgebra& alg, const OrderStructure& order,
                                    const AtomVector& v);

/// Every atom vector whose sum is the unit, found by bounded DFS over the
/// box prod_t [0, ord(a_t)] with memoized prefix sums. Throws
/// std::logic_error if none exists (impossible for a valid atomic algebra).
SeqSet enumerate_seq(const EffectAlgebra& alg, const OrderStructure& order);

/// One decomposition of x: the lexicographically first vector in the box
/// whose sum is x. Throws std::logic_error if none exists.
AtomVector decompose(const EffectAlgebra& alg, const OrderStructure& order, ElementId x);

}  // namespace ea
