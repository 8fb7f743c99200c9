#pragma once

#include "ea/decomp.hpp"
#include "ea/rational.hpp"

#include <string>
#include <vector>

namespace ea {

/// Dense matrix of exact rationals. No floating point anywhere near this.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const RationalMatrix&) const = default;

  static RationalMatrix from_int_rows(const std::vector<std::vector<long long>>& rows);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> e_;
};

/// Matrix whose rows are the SeqSet rows in canonical order.
RationalMatrix build_matrix(const SeqSet& seq);

/// Appends an all-ones column.
RationalMatrix augment_ones(const RationalMatrix& a);

/// Exact rank by fraction-free (Bareiss) elimination on a
/// denominator-cleared integer copy; pivots by first nonzero.
int rank(const RationalMatrix& a);

/// Reduced row echelon form: unit pivots, pivot columns cleared above and
/// below. Canonical, so echelon displays from other tools compare equal
/// exactly when the row spaces match.
RationalMatrix rref(const RationalMatrix& a);

/// Staircase test: unit pivots strictly moving right, zeros below each
/// pivot, zero rows at the bottom. True for any echelon form, reduced or not.
bool is_row_echelon_with_unit_pivots(const RationalMatrix& a);

struct RankReport {
  int rank_a = 0;
  int rank_b = 0;                         // rank of (A|1)
  RationalMatrix echelon_b;               // rref of (A|1)
  bool ranks_equal() const { return rank_a == rank_b; }
};

/// Ranks of A and (A|1) plus the canonical echelon form of (A|1).
RankReport rank_report(const RationalMatrix& a);

/// Aligned fixed-width rendering, entries as integers or p/q.
std::string pretty(const RationalMatrix& a);

}  // namespace ea
