#include "ea/simplex.hpp"

#include <stdexcept>

namespace ea {

// Phase-1: minimize the sum of artificial variables z in
//   [A | I] (x,z)' = b,  x,z >= 0
// starting from the all-artificial basis. Optimum 0 <=> feasible. On an
// infeasible instance the dual vector y (from the artificial columns'
// reduced costs) satisfies y'A <= 0, y'b > 0.
FeasibilityResult solve_nonnegative(const RationalMatrix& a, const std::vector<Rational>& b) {
  const int n = a.rows();
  const int m = a.cols();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("b size mismatch");

  const int cols = m + n + 1;  // structural, artificial, rhs
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(cols));
  std::vector<int> sign(n, 1);
  for (int i = 0; i < n; ++i) {
    sign[i] = b[i] < 0 ? -1 : 1;  // keep rhs nonnegative
    for (int j = 0; j < m; ++j) t[i][j] = sign[i] * a.at(i, j);
    t[i][m + i] = 1;
    t[i][cols - 1] = sign[i] * b[i];
  }

  // Reduced costs for cost 0 on x, 1 on z, basis = artificials:
  // d_j = c_j - sum_i t[i][j]; objective = sum_i rhs_i.
  std::vector<Rational> d(cols);
  for (int j = 0; j < cols; ++j) {
    Rational col_sum = 0;
    for (int i = 0; i < n; ++i) col_sum += t[i][j];
    Rational c = (j >= m && j < m + n) ? 1 : 0;
    d[j] = c - col_sum;
  }
  Rational objective = -d[cols - 1];
  d[cols - 1] = 0;

  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) basis[i] = m + i;

  for (;;) {
    // Bland: entering column is the lowest index with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < m + n; ++j) {
      if (d[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    // Ratio test; ties broken by smallest basic variable index.
    int leave = -1;
    Rational best;
    for (int i = 0; i < n; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) {
      throw std::logic_error("phase-1 objective unbounded; cannot happen");
    }

    Rational pivot = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= pivot;
    for (int i = 0; i < n; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = d[enter];
    objective += f * t[leave][cols - 1];  // f < 0, step >= 0: objective never rises
    for (int j = 0; j < cols; ++j) d[j] -= f * t[leave][j];
    basis[leave] = enter;
  }

  FeasibilityResult result;
  if (objective == 0) {
    result.feasible = true;
    result.solution.assign(m, 0);
    for (int i = 0; i < n; ++i) {
      if (basis[i] < m) result.solution[basis[i]] = t[i][cols - 1];
      // A leftover artificial in the basis sits at value 0 and does not
      // disturb the structural solution.
    }
  } else {
    result.feasible = false;
    // y_i = c_{z_i} - d_{z_i} = 1 - d[m+i], then undo the row sign flips.
    result.farkas_y.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      result.farkas_y[i] = sign[i] * (Rational(1) - d[m + i]);
    }
  }
  return result;
}

}  // namespace ea
