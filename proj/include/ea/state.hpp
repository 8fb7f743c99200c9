#pragma once

#include "ea/algebra.hpp"
#include "ea/decomp.hpp"
#include "ea/matrix.hpp"
#include "ea/order.hpp"
#include "ea/rational.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ea {

/// A state, witnessed by nonnegative atom weights solving A*s = 1 together
/// with the induced value h(x) = sum_t k_t s_t for every element.
struct StateCertificate {
  std::vector<Rational> atom_weights;  // s_1..s_m, basis order
  std::vector<Rational> values;        // h(x), indexed by ElementId
};

/// A refutation: either the two ranks differ, or a Farkas vector showing
/// A*s = 1 has no nonnegative solution even though the ranks agree.
struct NoStateCertificate {
  enum class Kind { RankMismatch, Farkas };
  Kind kind = Kind::RankMismatch;
  int rank_a = 0;                  // RankMismatch only
  int rank_b = 0;
  std::vector<Rational> farkas_y;  // Farkas only: y'A <= 0, y'1 > 0
};

using StateDecision = std::variant<StateCertificate, NoStateCertificate>;

/// Decides state existence. Rank test first (the cheaper certificate),
/// then exact nonnegative feasibility of A*s = 1; a found state is
/// extended to every element through its atom decomposition. Both
/// certificate kinds are verified before being returned; a verification
/// failure aborts via std::logic_error since it can only mean a bug.
StateDecision decide_state(const EffectAlgebra& alg, const OrderStructure& order,
                           const RationalMatrix& seq_matrix);

struct VerificationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Checks an arbitrary candidate certificate (including hand-written ones)
/// against every invariant: weights nonnegative, A*s = 1 row by row,
/// h(0) = 0, h(1) = 1, h matches the weights on atoms, additivity with
/// h(p) + h(q) <= 1 on every defined sum, and all values in [0,1].
VerificationReport verify_state(const EffectAlgebra& alg, const StateCertificate& cert);

/// Re-checks a refutation: rank mismatches by recomputing both ranks,
/// Farkas certificates by exact matrix-vector arithmetic.
VerificationReport verify_no_state(const RationalMatrix& seq_matrix, const NoStateCertificate& cert);

/// Text form of a decision, exact rationals only, re-parsable.
std::string serialize_certificate(const EffectAlgebra& alg, const StateDecision& decision);

struct CertificateError : std::runtime_error {
  explicit CertificateError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parses the text form back. Throws CertificateError on malformed input.
StateDecision parse_certificate(const EffectAlgebra& alg, const std::string& text);

}  // namespace ea
