#pragma once

#include "ea/matrix.hpp"
#include "ea/rational.hpp"

#include <vector>

namespace ea {

/// Outcome of the exact nonnegative feasibility question A*x = b, x >= 0.
///
/// Infeasible instances carry a Farkas witness y: y'A <= 0 componentwise
/// and y'b > 0, a refutation checkable by plain matrix arithmetic.
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> solution;  // length cols(A) when feasible
  std::vector<Rational> farkas_y;  // length rows(A) when infeasible
};

/// Phase-1 simplex over exact rationals with Bland's anti-cycling rule.
/// Terminating and exact; the Farkas vector is read off the final dual.
FeasibilityResult solve_nonnegative(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace ea
