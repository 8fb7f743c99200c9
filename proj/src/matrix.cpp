#include "ea/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ea {

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix build_matrix(const SeqSet& seq) {
  int n = static_cast<int>(seq.rows.size());
  int m = n == 0 ? 0 : static_cast<int>(seq.rows[0].size());
  RationalMatrix a(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) a.at(i, j) = seq.rows[i][j];
  }
  return a;
}

RationalMatrix augment_ones(const RationalMatrix& a) {
  RationalMatrix b(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) b.at(i, j) = a.at(i, j);
    b.at(i, a.cols()) = 1;
  }
  return b;
}

int rank(const RationalMatrix& a) {
  const int rows = a.rows(), cols = a.cols();
  // Clear denominators row by row; row scaling leaves the rank alone.
  std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
  for (int i = 0; i < rows; ++i) {
    BigInt scale = 1;
    for (int j = 0; j < cols; ++j) scale = lcm(scale, denominator(a.at(i, j)));
    for (int j = 0; j < cols; ++j) {
      m[i][j] = numerator(a.at(i, j)) * (scale / denominator(a.at(i, j)));
    }
  }

  // Bareiss: every division below is exact, entries stay integral.
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

RationalMatrix rref(const RationalMatrix& a) {
  RationalMatrix m = a;
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    }
    Rational inv = m.at(r, c);
    for (int j = c; j < cols; ++j) m.at(r, j) /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return m;
}

bool is_row_echelon_with_unit_pivots(const RationalMatrix& a) {
  int last_pivot = -1;
  bool zero_row_seen = false;
  for (int i = 0; i < a.rows(); ++i) {
    int lead = -1;
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) != 0) {
        lead = j;
        break;
      }
    }
    if (lead < 0) {
      zero_row_seen = true;
      continue;
    }
    if (zero_row_seen) return false;       // nonzero row below a zero row
    if (lead <= last_pivot) return false;  // staircase must move right
    if (a.at(i, lead) != 1) return false;
    last_pivot = lead;
  }
  return true;
}

RankReport rank_report(const RationalMatrix& a) {
  RankReport report;
  RationalMatrix b = augment_ones(a);
  report.rank_a = rank(a);
  report.rank_b = rank(b);
  report.echelon_b = rref(b);
  return report;
}

std::string pretty(const RationalMatrix& a) {
  std::vector<std::string> cells(static_cast<size_t>(a.rows()) * a.cols());
  std::vector<size_t> width(a.cols(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      std::string s = to_string(a.at(i, j));
      width[j] = std::max(width[j], s.size());
      cells[static_cast<size_t>(i) * a.cols() + j] = std::move(s);
    }
  }
  std::ostringstream os;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const std::string& s = cells[static_cast<size_t>(i) * a.cols() + j];
      os << (j ? " " : "") << std::string(width[j] - s.size(), ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ea
