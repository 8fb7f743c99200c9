#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ea {

/// Index into an algebra's carrier. Index 0 always names the zero element.
using ElementId = int;

inline constexpr ElementId kZero = 0;
inline constexpr int kNoSum = -1;  // table entry for "p + q undefined"

/// A finite effect algebra stored as an explicit partial Cayley table.
///
/// One entry per ordered pair: commutativity is a checked axiom, not a
/// storage assumption, so invalid (asymmetric) tables are representable
/// and get reported by validate() instead of being silently repaired.
class EffectAlgebra {
 public:
  /// Carrier of names.size() elements; names[0] is the zero element.
  /// The zero row/column (0 + x = x = x + 0) is pre-filled.
  EffectAlgebra(std::vector<std::string> names, ElementId unit);

  int size() const { return n_; }
  ElementId unit() const { return unit_; }
  const std::string& name(ElementId x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  bool defined(ElementId p, ElementId q) const { return table_[p * n_ + q] != kNoSum; }

  /// Value of p + q, or kNoSum when undefined.
  ElementId sum(ElementId p, ElementId q) const { return table_[p * n_ + q]; }

  void set_sum(ElementId p, ElementId q, int v) { table_[p * n_ + q] = v; }
  void set_sum_sym(ElementId p, ElementId q, int v) {
    table_[p * n_ + q] = v;
    table_[q * n_ + p] = v;
  }

  const std::vector<int>& table() const { return table_; }

  /// Id for a display name, or kNoSum when unknown.
  ElementId id_of(const std::string& name) const;

 private:
  int n_;
  ElementId unit_;
  std::vector<std::string> names_;
  std::vector<int> table_;
};

enum class AxiomKind {
  Commutativity,
  Associativity,
  Orthosupplement,
  ZeroUnit,
  ZeroIdentity,  // p + 0 = p, derivable but checked against the table
  Cancellation,  // derived law; a failure on an axiom-clean table is a bug
};

struct AxiomViolation {
  AxiomKind kind;
  ElementId p = -1;
  ElementId q = -1;
  ElementId r = -1;
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> structural;      // malformed input, reported before axioms
  std::vector<AxiomViolation> violations;   // failures of the four defining laws
  std::vector<AxiomViolation> diagnostics;  // derived laws (cancellation); internal-bug indicators

  bool structurally_ok() const { return structural.empty(); }
  bool valid() const { return structural.empty() && violations.empty(); }
  std::string summary(const EffectAlgebra& alg) const;
};

/// Checks the table against the four defining laws of an effect algebra,
/// listing every violation with its witnessing elements. The derived
/// cancellation law is checked separately as a consistency diagnostic.
ValidationReport validate(const EffectAlgebra& alg);

/// k-fold sum x + x + ... + x, accumulated left to right.
/// nullopt when some intermediate sum is undefined; k = 0 gives zero.
std::optional<ElementId> n_times(const EffectAlgebra& alg, ElementId x, int k);

}  // namespace ea
